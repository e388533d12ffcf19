#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lensskein/scalar/half_twist.hpp"
#include "lensskein/scalar/rat_func.hpp"

namespace lensskein::trace {

using scalar::HalfTwistScalar;
using scalar::LaurentPoly;
using scalar::RatFunc;

// Commutative monomial in the formal variables s_k, k != 0 (s_0 = 1 is never stored).
struct SMonomial {
    std::vector<int> idx;  // sorted, nonzero, with multiplicity

    SMonomial() = default;
    explicit SMonomial(std::vector<int> indices);
    static SMonomial single(int k) { return k == 0 ? SMonomial() : SMonomial({k}); }

    int level() const;
    int max_index() const { return idx.empty() ? 0 : idx.back(); }
    int min_index() const { return idx.empty() ? 0 : idx.front(); }
    bool empty() const { return idx.empty(); }
    SMonomial times(const SMonomial& o) const;
    // "s[1]s[3]", or "1" for the empty monomial.
    std::string str() const;

    bool operator==(const SMonomial& o) const { return idx == o.idx; }
};

// Printing order: weighted level, then the sorted index list lexicographically.
struct SMonomialLess {
    bool operator()(const SMonomial& a, const SMonomial& b) const;
};

template <class C>
using SMap = std::map<SMonomial, C, SMonomialLess>;

// Element of Q(q, z)[s_k : k != 0].
class TraceValue {
public:
    TraceValue() = default;
    TraceValue(RatFunc c);  // NOLINT(google-explicit-constructor)
    static TraceValue monomial(const SMonomial& m, RatFunc c = RatFunc(1));

    const SMap<RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    RatFunc coeff(const SMonomial& m) const;

    void add_term(const SMonomial& m, const RatFunc& c);
    TraceValue& operator+=(const TraceValue& o);
    TraceValue& operator-=(const TraceValue& o);
    TraceValue& operator*=(const TraceValue& o);
    friend TraceValue operator+(TraceValue a, const TraceValue& b) { return a += b; }
    friend TraceValue operator-(TraceValue a, const TraceValue& b) { return a -= b; }
    friend TraceValue operator*(TraceValue a, const TraceValue& b) { return a *= b; }
    TraceValue scaled(const RatFunc& c) const;

    bool operator==(const TraceValue& o) const;
    bool operator!=(const TraceValue& o) const { return !(*this == o); }

    // Monomial levels that occur.
    std::vector<int> levels() const;

    std::string str() const;
    nlohmann::json to_json() const;

    void reduce_coefficients();

private:
    SMap<RatFunc> terms_;
};

// Formats "c * m" with the coefficient parenthesized when it has several terms.
std::string format_term(const std::string& coeff, const std::string& mono);

// Trace value scaled by Delta^{n-1} w^e.
struct XValue {
    int n = 1;
    int e = 0;
    SMap<HalfTwistScalar> terms;

    bool operator==(const XValue& o) const;
    bool operator!=(const XValue& o) const { return !(*this == o); }
    // Parity of the odd part: true when every coefficient is a pure multiple of w.
    bool uniform_parity() const;
    std::string str() const;
    nlohmann::json to_json() const;
};

XValue make_xvalue(const TraceValue& t, int n, int e);

}  // namespace lensskein::trace
