#include "extalg/invariants.hpp"

namespace extalg {

namespace {

std::string bool_str(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string InvariantVector::str() const {
    std::string out = "(dim=" + std::to_string(dim);
    out += ", dim A^2=" + std::to_string(dim_a2);
    out += ", dim A^3=" + std::to_string(dim_a3);
    out += ", nil index=";
    out += nil_index ? std::to_string(*nil_index) : std::string("-");
    out += ", dim Ann=" + std::to_string(dim_ann);
    out += ", dim Der=" + std::to_string(dim_der);
    out += ", commutative=" + bool_str(commutative);
    out += ", associative=" + bool_str(associative);
    out += ", right alternative=" + bool_str(right_alternative);
    out += ")";
    return out;
}

std::string InvariantVector::first_difference(const InvariantVector& other) const {
    if (dim != other.dim) return "dim";
    if (dim_a2 != other.dim_a2) return "dim A^2";
    if (dim_a3 != other.dim_a3) return "dim A^3";
    if (nil_index != other.nil_index) return "nil index";
    if (dim_ann != other.dim_ann) return "dim Ann";
    if (dim_der != other.dim_der) return "dim Der";
    if (commutative != other.commutative) return "commutative";
    if (associative != other.associative) return "associative";
    if (right_alternative != other.right_alternative) return "right alternative";
    return "";
}

}  // namespace extalg
