#pragma once

#include "looprep/linalg.hpp"

#include <string>

namespace looprep {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family;
    int rank;

    bool operator==(const SimpleType&) const = default;
};

// Parses "A5", "SU6", "B3", "Spin7", "C2", "Sp2", "D4", "Spin8", "E6", ...
// (case-insensitive). Throws UsageError for unknown names or invalid ranks.
SimpleType parse_group_name(const std::string& name);

std::string type_name(const SimpleType& t);      // "D4"
std::string classical_alias(const SimpleType& t); // "Spin8"

// Exact Cartan data for one simple type, realized in the standard
// orthonormal coordinates. The inner product is the multiple of the
// standard one making the highest root have squared length 2.
struct RootSystem {
    SimpleType type;
    std::size_t ambient_dim = 0;
    Rat basic_scale = 1; // <x,y> = basic_scale * (standard dot)

    Mat simple_roots;         // rows alpha_1..alpha_n
    Mat simple_coroots;       // rows alpha_i^vee = 2 alpha_i / <alpha_i,alpha_i>
    Mat fundamental_weights;  // rows lambda_i,    <lambda_i, alpha_j^vee> = delta_ij
    Mat fundamental_coweights;// rows lambda_i^vee, <lambda_i^vee, alpha_j> = delta_ij
    Vec highest_root;         // theta
    IVec marks;               // theta = sum m_i alpha_i
    IVec comarks;             // <lambda_i, theta>
    IMat cartan;              // <alpha_i, alpha_j^vee>
    Mat gram;                 // <lambda_i^vee, lambda_j^vee>
    Mat all_roots;            // every root, deterministic order
    long long center_order = 0; // det(cartan) = |P^vee / Q^vee|

    std::size_t rank() const { return static_cast<std::size_t>(type.rank); }
    std::string name() const { return type_name(type); }
    bool simply_laced() const;
};

RootSystem build(const SimpleType& type);

Rat inner(const RootSystem& rs, const Vec& x, const Vec& y);

// Dynkin labels <x, alpha_i^vee> of a weight; left inverse of
// from_dynkin_labels up to the orthogonal complement of the root span
// (the all-ones direction for A_n).
Vec to_dynkin_labels(const RootSystem& rs, const Vec& x);
Vec from_dynkin_labels(const RootSystem& rs, const Vec& labels);

// Coweight coordinates <x, alpha_i> and their inverse.
Vec to_colabels(const RootSystem& rs, const Vec& x);
Vec from_colabels(const RootSystem& rs, const Vec& colabels);

// Orthogonal projection onto the span of the roots.
Vec project_to_root_span(const RootSystem& rs, const Vec& x);

} // namespace looprep
