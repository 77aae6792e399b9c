#pragma once

#include "sympspin/operators.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sympspin {

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Parses the text form produced by SpinorPoly::str(), and more generally
/// any expression built from rationals, `i`, x1..x{2n}, q1..q{n} with
/// + - * / ^ and parentheses. Division is only by nonzero constants.
SpinorPoly parse_spinor(std::string_view text, int rank);

/// An operator word such as `Ds Xs` or `Ts cl(3)`. Words compose
/// right-to-left. `Ts` (all 2n twistor components) may only appear
/// leftmost and makes the result vector-valued.
struct OperatorPipeline {
    std::vector<LinearOperator> components;
    bool vectorValued = false;

    std::vector<SpinorPoly> apply(const SpinorPoly& s) const;
};

OperatorPipeline parse_operator(std::string_view text, int rank);

}  // namespace sympspin
