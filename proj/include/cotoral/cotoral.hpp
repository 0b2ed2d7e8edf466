#pragma once

// Everything except the command-line adapter (cotoral/cli.hpp), which needs CLI11.

#include "cotoral/balmer.hpp"
#include "cotoral/beyond_tori.hpp"
#include "cotoral/dot.hpp"
#include "cotoral/errors.hpp"
#include "cotoral/expr_parser.hpp"
#include "cotoral/integer_matrix.hpp"
#include "cotoral/isotropy.hpp"
#include "cotoral/json_io.hpp"
#include "cotoral/lattice.hpp"
#include "cotoral/poset.hpp"
#include "cotoral/rational.hpp"
#include "cotoral/semifree.hpp"
