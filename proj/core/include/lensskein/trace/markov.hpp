#pragma once

#include <stdexcept>

#include "lensskein/braid/loops.hpp"
#include "lensskein/hecke/algebra.hpp"
#include "lensskein/trace/trace_value.hpp"

namespace lensskein::trace {

enum class PeelOrder {
    LeftToRight,  // the braiding run left of the top strand is cycled to the right
    RightToLeft,  // the same run is multiplied in from the left instead
};

TraceValue trace(const hecke::AlgebraElement& e, PeelOrder order = PeelOrder::LeftToRight);
TraceValue trace_word(const braid::MixedBraidWord& w, PeelOrder order = PeelOrder::LeftToRight);
// Trace of an unprimed or primed loop monomial on max(1, #loops) strands.
TraceValue trace_monomial(const braid::LoopMonomial& m);

XValue invariant_x(const braid::MixedBraidWord& w);

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Index map s_j -> s_{-j} (j < 0), s_j -> s_{2p-j} (0 < j <= p), with
// coefficients sent through scalar_I. Throws DomainError for j > p.
TraceValue map_I(const TraceValue& v, int p);

struct Equation {
    braid::LoopMonomial source;
    int sign = 1;
    int p = 0;
    braid::MixedBraidWord image;  // bbm(source, sign, p)
    RatFunc coefficient;          // rhs = coefficient * raw_rhs
    TraceValue lhs;               // trace(source)
    TraceValue raw_rhs;           // trace(image)
    TraceValue rhs;

    // lhs - rhs, the relation imposed on the s-variables.
    TraceValue relation() const { return lhs - rhs; }
    nlohmann::json to_json() const;
};

// Coefficient c with X(m) = X(bbm(m, sign, p)) equivalent to tr(m) = c tr(bbm):
// lambda^L / z for sign +, lambda^(L-1) / z for sign -, L the level of m.
RatFunc bbm_coefficient(const braid::LoopMonomial& m, int sign);

// Builds the equation and checks the coefficient against the full
// Delta / sqrt(lambda) bookkeeping; throws std::logic_error on mismatch.
Equation bbm_equation(const braid::LoopMonomial& m, int sign, int p);

// Engine memo sizes for trace evaluation.
std::size_t trace_cache_size();

}  // namespace lensskein::trace
