#pragma once

#include <string>

#include "stabset/qubo.hpp"

namespace stabset {

enum class QuboFormat { coordinate, json_lines };

/// Upper-triangular export, 0-based indices.
///
/// coordinate: "n nnz", then "i i -1" for every vertex, then "i j 2*beta" for every
/// coupling with i < j in lexicographic order; lines separated by '\n' with no
/// trailing newline. An upper-triangular evaluator sum_{i<=j} w_ij x_i x_j
/// reproduces x^T Q x exactly.
///
/// json_lines: {"n":..,"nnz":..} then one {"i":..,"j":..,"w":..} object per line in
/// the same order, each line terminated by '\n'.
std::string export_qubo(const QuboInstance& q, QuboFormat format);

/// Inverse of export_qubo. Throws ParseError for malformed text and ValidationError
/// for weights that do not describe -I + beta*A with integer beta >= 1.
QuboInstance import_qubo(const std::string& text, QuboFormat format);

}  // namespace stabset
