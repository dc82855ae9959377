#pragma once

#include "looprep/rational.hpp"

#include <optional>
#include <vector>

namespace looprep {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>; // row-major

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;

Vec zero_vec(std::size_t n);
Mat zero_mat(std::size_t rows, std::size_t cols);
Mat identity_mat(std::size_t n);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& a);
Rat dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);

Mat transpose(const Mat& m);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& m, const Vec& v);

Rat det(Mat m);
Mat inverse(Mat m); // throws std::domain_error if singular

// Solves A x = b exactly for a matrix whose columns are linearly
// independent (rows may exceed columns). Returns nullopt when the system
// is inconsistent, i.e. b is not in the column span.
std::optional<Vec> solve_columns(const Mat& a, const Vec& b);

// Column-style Hermite normal form. Input columns generate an integer
// lattice; the result is its canonical basis: pivot entries positive,
// entries left of a pivot reduced into [0, pivot). Zero columns dropped.
IMat hnf_columns(IMat m);

long long lcm_of_denominators(const Mat& m);

} // namespace looprep
