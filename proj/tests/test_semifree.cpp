#include <gtest/gtest.h>

#include "oracles/semifree_oracle.hpp"
#include "support.hpp"

using namespace cotoral;
using namespace testing_support;

namespace {

WideSphere even_object(std::map<int, std::size_t> dims, std::map<int, Subspace> filt) {
    return {ParityPart::make(0, dims, filt), ParityPart(1)};
}

Subspace span2(RatMatrix rows) { return Subspace::span(2, std::move(rows)); }

// The three wide spheres with p_1 = p_T = 1 + t^2.
WideSphere sz_wedge() { return even_object({{0, 1}, {2, 1}}, {{2, span2({{1, 0}})}, {4, Subspace::zero(2)}}); }
WideSphere s0_wedge_s2() { return even_object({{0, 1}, {2, 1}}, {{2, span2({{0, 1}})}, {4, Subspace::zero(2)}}); }
WideSphere mapping_cone() { return even_object({{0, 1}, {2, 1}}, {{2, span2({{1, 1}})}, {4, Subspace::zero(2)}}); }

LaurentPoly poly(std::initializer_list<std::pair<const int, std::size_t>> terms) { return LaurentPoly(terms); }

AttachingDatum extension(RatVector v) {
    AttachingDatum d;
    d.extension = std::move(v);
    return d;
}

AttachingDatum fixed(RatVector v) {
    AttachingDatum d;
    d.fixed_component = std::move(v);
    return d;
}

}  // namespace

TEST(Polynomials, Examples) {
    for (const auto& x : {sz_wedge(), s0_wedge_s2(), mapping_cone()}) {
        EXPECT_EQ(fixed_point_poly(x), poly({{0, 1}, {2, 1}}));
        EXPECT_EQ(borel_jump_poly(x), poly({{0, 1}, {2, 1}}));
    }
    EXPECT_EQ(fixed_point_poly(fixed_sphere(0)), poly({{0, 1}}));
    EXPECT_EQ(borel_jump_poly(fixed_sphere(0)), poly({{0, 1}}));
    EXPECT_EQ(fixed_point_poly(rep_sphere(1)), poly({{0, 1}}));
    EXPECT_EQ(borel_jump_poly(rep_sphere(1)), poly({{2, 1}}));
    auto s_z_wedge = wedge(rep_sphere(1), suspend(rep_sphere(-1), 2));
    EXPECT_EQ(borel_jump_poly(s_z_wedge), poly({{0, 1}, {2, 1}}));
    EXPECT_EQ(fixed_point_poly(s_z_wedge), poly({{0, 1}, {2, 1}}));
    EXPECT_TRUE(fixed_point_poly(WideSphere()).empty());
    EXPECT_TRUE(borel_jump_poly(WideSphere()).empty());
}

TEST(Polynomials, CoefficientSumsPerParity) {
    for (int trial = 0; trial < 200; ++trial) {
        auto x = random_sphere();
        std::size_t sum_t = 0, sum_1 = 0;
        for (const auto& [e, c] : fixed_point_poly(x)) sum_t += c;
        for (const auto& [e, c] : borel_jump_poly(x)) sum_1 += c;
        EXPECT_EQ(sum_t, x.total_dim());
        EXPECT_EQ(sum_1, x.total_dim());
        for (const auto& [e, c] : borel_jump_poly(x)) {
            const auto& part = x.part(parity_of(e));
            EXPECT_GE(e + 2, part.jumps().begin()->first);
            EXPECT_LE(e, part.jumps().rbegin()->first);
        }
    }
}

TEST(Validation, RejectsMalformedParts) {
    EXPECT_THROW(ParityPart::make(0, {{1, 1}}, {}), ValidationError);
    EXPECT_THROW(ParityPart::make(0, {{0, 1}}, {}), ValidationError);  // never vanishes
    EXPECT_THROW(ParityPart::make(0, {{0, 2}}, {{2, span2({{1, 0}})}, {4, span2({{0, 1}})}}), ValidationError);
    EXPECT_THROW(ParityPart::make(0, {{0, 2}}, {{2, Subspace::zero(3)}}), DimensionError);
    EXPECT_NO_THROW(ParityPart::make(1, {}, {}));
}

TEST(Untwisted, ExampleCatalog) {
    auto r1 = is_untwisted(sz_wedge());
    EXPECT_FALSE(r1.holds);
    ASSERT_TRUE(r1.failure);
    EXPECT_EQ(r1.failure->condition, 2);
    EXPECT_EQ(r1.failure->degree, 0);
    EXPECT_TRUE(is_untwisted(s0_wedge_s2()).holds);
    EXPECT_TRUE(is_untwisted(mapping_cone()).holds);
    EXPECT_EQ(wedge(rep_sphere(1), suspend(rep_sphere(-1), 2)), sz_wedge());
}

TEST(Untwisted, CumulativeConditionIsNeeded) {
    // V_0 = <a>, V_2 = <b>, V_4 = <c>, Nbar_2 = <a+b, c>, Nbar_4 = <a+b>:
    // each V_i meets Nbar_{i+2} trivially, but V_{<=2} contains a+b.
    auto x = even_object({{0, 1}, {2, 1}, {4, 1}}, {{2, Subspace::span(3, {{1, 1, 0}, {0, 0, 1}})},
                                                     {4, Subspace::span(3, {{1, 1, 0}})},
                                                     {6, Subspace::zero(3)}});
    EXPECT_EQ(fixed_point_poly(x), borel_jump_poly(x));
    auto r = is_untwisted(x);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.failure->condition, 2);
    EXPECT_EQ(r.failure->degree, 2);
    EXPECT_FALSE(oracle::twisted(x, 0));
    // <c> splits off as S^{4-z}; neither summand satisfies condition (1) alone
    PartSplitting even{{{0, 0, 1}}, {{1, 0, 0}, {0, 1, 0}}};
    auto [s4, rest] = split_summands(x, even, {});
    EXPECT_EQ(s4, twist(fixed_sphere(4), -1));
    EXPECT_TRUE(is_k_twisted(s4, -1).holds);
    auto rr = is_untwisted(rest);
    EXPECT_FALSE(rr.holds);
    EXPECT_EQ(rr.failure->condition, 1);
    EXPECT_EQ(rr.failure->degree, 2);
    PartSplitting bad{{{1, 0, 0}}, {{0, 1, 0}, {0, 0, 1}}};
    EXPECT_THROW(split_summands(x, bad, {}), ValidationError);
}

TEST(Untwisted, ConditionOneFailure) {
    auto x = even_object({{0, 1}}, {{4, Subspace::zero(1)}});
    auto r = is_untwisted(x);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.failure->condition, 1);
}

TEST(Twisted, Examples) {
    for (int k = -3; k <= 3; ++k) {
        EXPECT_TRUE(is_k_twisted(rep_sphere(k), k).holds);
        EXPECT_EQ(twist(fixed_sphere(0), k), rep_sphere(k));
    }
    EXPECT_TRUE(is_k_twisted(fixed_sphere(0), 0).holds);
    EXPECT_FALSE(is_k_twisted(fixed_sphere(0), 1).holds);
}

TEST(Twisted, AgreesWithDefinitionOracle) {
    int agree_true = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int k = static_cast<int>(uniform(-2, 2));
        auto x = trial % 2 ? random_twisted(k) : random_sphere();
        bool lib = is_k_twisted(x, k).holds;
        ASSERT_EQ(lib, oracle::twisted(x, k)) << to_json(x).dump();
        agree_true += lib;
    }
    EXPECT_GT(agree_true, 150);
}

TEST(Twisted, TwistShiftsTheIndex) {
    for (int trial = 0; trial < 200; ++trial) {
        auto x = trial % 2 ? random_twisted(static_cast<int>(uniform(-2, 2))) : random_sphere();
        int j = static_cast<int>(uniform(-2, 2));
        int k = static_cast<int>(uniform(-2, 2));
        EXPECT_EQ(is_k_twisted(twist(x, j), k).holds, is_k_twisted(x, k - j).holds);
        EXPECT_EQ(twist(twist(x, k), -k), x);
    }
}

TEST(Operations, Examples) {
    EXPECT_EQ(wedge(fixed_sphere(0), fixed_sphere(2)), s0_wedge_s2());
    for (int i = 0; i < 20; ++i) {
        auto x = random_sphere();
        EXPECT_EQ(suspend(x, 0), x);
        EXPECT_EQ(suspend(suspend(x, 3), -3), x);
        EXPECT_EQ(fixed_point_poly(suspend(x, 1)), shift(fixed_point_poly(x), 1));
    }
    EXPECT_EQ(suspend(fixed_sphere(0), 1), fixed_sphere(1));
}

TEST(Attach, Examples) {
    // nontrivial S^1 -> S^0 gives the mapping cone M_f
    EXPECT_EQ(attach_fixed_sphere(fixed_sphere(0), 1, extension({1})), mapping_cone());
    // the zero map splits
    EXPECT_EQ(attach_fixed_sphere(fixed_sphere(0), 1, {}), s0_wedge_s2());
    EXPECT_EQ(attach_fixed_sphere(fixed_sphere(0), 1, extension({0})), wedge(fixed_sphere(0), fixed_sphere(2)));
    // even nonzero maps into S^0 v S^2 cut off a summand
    auto x = s0_wedge_s2();
    EXPECT_EQ(attach_fixed_sphere(x, 0, fixed({1})), fixed_sphere(2));
    EXPECT_EQ(attach_fixed_sphere(x, 2, fixed({1})), fixed_sphere(0));
    // in M_f the degree 0 class is not a map from S^0
    EXPECT_THROW(attach_fixed_sphere(sz_wedge(), 0, fixed({1})), ValidationError);
    EXPECT_THROW(attach_fixed_sphere(mapping_cone(), 2, fixed({1, 0})), DimensionError);
    EXPECT_THROW(attach_fixed_sphere(fixed_sphere(0), 1, extension({1, 2})), DimensionError);
}

TEST(Attach, MapsIntoM_f) {
    // Hom(S^0, M_f) in the split-off sense: V_0 n Nbar_0 = V_0, but the
    // vector e0 lies in Nbar_2? No: Nbar_2 = <e0 + e1>, so e0 is splittable.
    auto y = attach_fixed_sphere(mapping_cone(), 0, fixed({1}));
    EXPECT_EQ(y, fixed_sphere(2));
    // S^2 -> M_f: e1 is not in Nbar_2 = <e0 + e1>, so there is no such map
    EXPECT_THROW(attach_fixed_sphere(mapping_cone(), 2, fixed({1})), ValidationError);
}

TEST(Attach, PreservesTwistedness) {
    for (int trial = 0; trial < 300; ++trial) {
        int k = static_cast<int>(uniform(-1, 1));
        auto x = random_twisted(k, 5);
        int n = static_cast<int>(uniform(-3, 5));
        const auto& same = twist(x, -k).part(parity_of(n));
        const auto& other = x.part(1 - parity_of(n));
        AttachingDatum d;
        if (same.block_dim(n) > 0 && uniform(0, 1)) {
            RatVector v(same.block_dim(n));
            for (auto& e : v) e = small_rational();
            d.fixed_component = v;
        } else {
            RatVector w(other.total());
            for (auto& e : w) e = small_rational();
            d.extension = w;
        }
        try {
            auto y = attach_sphere(x, n, d, k);
            EXPECT_TRUE(is_k_twisted(y, k).holds);
            EXPECT_TRUE(oracle::twisted(y, k));
        } catch (const ValidationError&) {
            // the datum was not a map into a twisted object; nothing to check
        }
    }
}

TEST(Summands, ExtractionPreservesTwistedness) {
    for (int trial = 0; trial < 200; ++trial) {
        int k = static_cast<int>(uniform(-1, 1));
        auto a = random_twisted(k, 3);
        auto b = random_twisted(k, 3);
        auto w = wedge(a, b);
        BasisChange phi{random_block_change(w.even()), random_block_change(w.odd())};
        auto x = apply_basis_change(w, phi);
        ASSERT_TRUE(is_isomorphism(w, x, phi));
        // the summands sit in x along the images of the coordinate vectors of a and b
        PartSplitting split[2];
        for (int par : {0, 1}) {
            const auto& pa = a.part(par);
            const auto& pw = w.part(par);
            const auto& m = phi[static_cast<std::size_t>(par)];
            std::size_t pos = 0;
            for (const auto& [d, n] : pw.v_dims()) {
                std::size_t na = pa.block_dim(d);
                for (std::size_t i = 0; i < n; ++i) (i < na ? split[par].first : split[par].second).push_back(m[pos + i]);
                pos += n;
            }
        }
        auto [x1, x2] = split_summands(x, split[0], split[1]);
        EXPECT_TRUE(is_k_twisted(x1, k).holds);
        EXPECT_TRUE(is_k_twisted(x2, k).holds);
        EXPECT_EQ(fixed_point_poly(x1), fixed_point_poly(a));
        EXPECT_EQ(fixed_point_poly(x2), fixed_point_poly(b));
        EXPECT_EQ(wedge(x1, x2).total_dim(), x.total_dim());
    }
}

TEST(Summands, RetractsOfTheFirstExampleStayOutside) {
    // an untwisted object wedged with the first example object is not untwisted
    auto x = wedge(s0_wedge_s2(), sz_wedge());
    EXPECT_FALSE(is_untwisted(x).holds);
    auto y = wedge(s0_wedge_s2(), mapping_cone());
    EXPECT_TRUE(is_untwisted(y).holds);
}

TEST(Retracts, ConditionTwoBoundsTheFiltration) {
    // condition (2) gives dim Nbar_i <= dim V_{>=i}; the reverse fails for S^{2-z}
    auto s = suspend(rep_sphere(-1), 2);
    EXPECT_TRUE(oracle::twisted(wedge(s, fixed_sphere(0)), 0) == false);
    EXPECT_TRUE(is_untwisted(s).holds == false);
    EXPECT_EQ(s.even().filtration(2).dim(), 0u);
    EXPECT_EQ(s.even().block_dim(2), 1u);
    for (int trial = 0; trial < 300; ++trial) {
        auto x = random_sphere(5);
        for (int par : {0, 1}) {
            const auto& p = x.part(par);
            bool cond2 = true;
            for (const auto& [d, n] : p.v_dims())
                if (!subspace_intersection(p.blocks_up_to(d), p.filtration(d + 2)).is_zero()) cond2 = false;
            if (!cond2 || p.jumps().empty()) continue;
            for (int i = p.jumps().begin()->first - 4; i <= p.jumps().rbegin()->first + 2; i += 2) {
                std::size_t above = 0;
                for (const auto& [d, n] : p.v_dims())
                    if (d >= i) above += n;
                EXPECT_LE(p.filtration(i).dim(), above);
            }
        }
    }
}

TEST(Decompose, Examples) {
    auto d2 = decompose_untwisted(s0_wedge_s2());
    ASSERT_TRUE(d2.succeeded());
    EXPECT_EQ(d2.steps.size(), 2u);
    auto d0 = decompose_untwisted(WideSphere());
    ASSERT_TRUE(d0.succeeded());
    EXPECT_TRUE(d0.steps.empty());
    auto d3 = decompose_untwisted(mapping_cone());
    ASSERT_TRUE(d3.succeeded());
    ASSERT_EQ(d3.steps.size(), 2u);
    EXPECT_EQ(d3.steps[1].vector, (RatVector{1, 1}));
    auto r = replay(d3);
    EXPECT_TRUE(is_isomorphism(r.object, mapping_cone(), r.to_target));
    auto d1 = decompose_untwisted(sz_wedge());
    EXPECT_FALSE(d1.succeeded());
    EXPECT_EQ(d1.failure->condition, 2);
    EXPECT_THROW(replay(d1), ValidationError);
}

TEST(Decompose, SucceedsIffTwistedAndReplays) {
    for (int trial = 0; trial < 300; ++trial) {
        int k = static_cast<int>(uniform(-2, 2));
        auto x = trial % 3 ? random_twisted(k) : random_sphere();
        auto d = decompose_twisted(x, k);
        ASSERT_EQ(d.succeeded(), oracle::twisted(x, k));
        if (!d.succeeded()) continue;
        EXPECT_EQ(d.steps.size(), x.total_dim());
        for (std::size_t i = 1; i < d.steps.size(); ++i)
            if (parity_of(d.steps[i].degree) == parity_of(d.steps[i - 1].degree)) {
                EXPECT_LE(d.steps[i - 1].degree, d.steps[i].degree);
            }
        auto r = replay(d);
        EXPECT_TRUE(is_isomorphism(r.object, x, r.to_target));
        EXPECT_EQ(fixed_point_poly(r.object), fixed_point_poly(x));
        EXPECT_EQ(borel_jump_poly(r.object), borel_jump_poly(x));
    }
}

TEST(Isomorphism, RejectsBadMaps) {
    auto x = s0_wedge_s2();
    BasisChange id{RatMatrix{{1, 0}, {0, 1}}, RatMatrix{}};
    EXPECT_TRUE(is_isomorphism(x, x, id));
    EXPECT_FALSE(is_isomorphism(x, mapping_cone(), id));
    BasisChange mixing{RatMatrix{{1, 1}, {0, 1}}, RatMatrix{}};
    EXPECT_FALSE(is_isomorphism(x, mapping_cone(), mixing));  // not block diagonal
    EXPECT_THROW(apply_basis_change(x, mixing), ValidationError);
}

TEST(ThickVersusIdeal, SphereWedgeContrast) {
    // S^z v S^{2-z} has isotropy {1, T}: in the thick tensor ideal of S^0 but not in thick(S^0)
    auto x = sz_wedge();
    EXPECT_FALSE(in_thick_of_sphere(x, 0));
    FiniteObjectExpr s0{1, {{ClosedSubgroup::full_torus(1), 0}}};
    FiniteObjectExpr ideal_x{1, {{ClosedSubgroup::full_torus(1), 0}, {ClosedSubgroup::trivial(1), 2}}};
    EXPECT_TRUE(ideal_contains(s0, ideal_x));
    EXPECT_TRUE(in_thick_of_sphere(fixed_sphere(0), 0));
    for (int trial = 0; trial < 50; ++trial) {
        int k = static_cast<int>(uniform(-2, 2));
        WideSphere w;
        for (int i = 0; i < uniform(0, 3); ++i) w = wedge(w, fixed_sphere(static_cast<int>(uniform(-3, 3))));
        EXPECT_TRUE(in_thick_of_sphere(twist(w, k), k));
    }
}
