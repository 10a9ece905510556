#include "homkit/dualizing.hpp"

#include <sstream>
#include <stdexcept>

namespace homkit {

std::string FormalExt::to_string() const {
    if (rank == 0) return "0";
    std::ostringstream os;
    os << source_label;
    if (rank > 1) os << " (rank " << rank << ")";
    return os.str();
}

FormalExt formal_ext_sum(const FormalExt& a, const FormalExt& b) {
    FormalExt out;
    out.rank = a.rank + b.rank;
    out.source_label = a.rank ? a.source_label : b.source_label;
    return out;
}

void require_nonnegative_support(const FiniteComplexHomology& x, const char* where) {
    for (int d : x.support())
        if (d < 0)
            throw std::invalid_argument(std::string(where) +
                                        ": homology has negative-degree support");
}

FormalExt GradedFormalExt::at(int degree) const {
    auto it = entries.find(degree);
    return it == entries.end() ? FormalExt{} : it->second;
}

void GradedFormalExt::set(int degree, FormalExt v) {
    if (entries.empty() && window_lo > window_hi) window_lo = window_hi = degree;
    window_lo = std::min(window_lo, degree);
    window_hi = std::max(window_hi, degree);
    if (v.rank == 0)
        entries.erase(degree);
    else
        entries[degree] = std::move(v);
}

std::vector<int> GradedFormalExt::support() const {
    std::vector<int> out;
    for (const auto& [d, v] : entries) out.push_back(d);
    return out;
}

std::string GradedFormalExt::to_string() const {
    if (entries.empty()) return "{}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [d, v] : entries) {
        os << (first ? "" : ", ") << d << ": " << v.to_string();
        first = false;
    }
    os << "}";
    return os.str();
}

FormalExt lin_bracket(const FgAbelianGroup& a, const FiniteComplexHomology& x, int i,
                      bool allow_noncyclic, const std::string& target_label) {
    require_nonnegative_support(x, "lin_bracket");
    if (!a.is_cyclic() && !allow_noncyclic)
        throw std::invalid_argument(
            "lin_bracket: coefficient group is not cyclic; pass "
            "allow_noncyclic for the factorwise extension");
    const FgAbelianGroup& h = x.at(i + 1);
    FormalExt out;
    out.rank = rationalize_rank(a) * h.free_rank;
    if (out.rank > 0) {
        std::string b = target_label.empty() ? h.to_string() : target_label;
        out.source_label = "Ext^1(Q, " + b + ")";
    }
    return out;
}

GradedFormalExt dualizing_homology(const FiniteComplexHomology& x,
                                   const std::string& target_label) {
    require_nonnegative_support(x, "dualizing_homology");
    GradedFormalExt out;
    out.window_lo = x.window_lo() - 1;
    out.window_hi = x.window_hi() - 1;
    const FgAbelianGroup z = free_group(1);
    for (int t = x.window_lo() - 1; t <= x.window_hi() - 1; ++t)
        out.set(t, lin_bracket(z, x, t, false, target_label));
    return out;
}

GradedFormalExt j_shriek_homology(const Int& p, const FiniteComplexHomology& x) {
    if (!is_prime_int(p))
        throw std::invalid_argument("j_shriek_homology: " + p.get_str() +
                                    " is not prime");
    require_nonnegative_support(x, "j_shriek_homology");
    GradedFormalExt out;
    out.window_lo = x.window_lo() - 1;
    out.window_hi = x.window_hi() - 1;
    const FgAbelianGroup fp = cyclic_group(p);
    for (int t = x.window_lo() - 1; t <= x.window_hi() - 1; ++t)
        out.set(t, lin_bracket(fp, x, t));
    return out;
}

FormalExt i_shriek(const FiniteComplexHomology& x) {
    return dualizing_homology(x).at(0);
}

Pi0Witness pi0_adjunction_check(const ChainComplex& c, const FgAbelianGroup& a) {
    c.validate();
    if (c.lowest_degree < 0)
        for (int d = c.lowest_degree; d < 0; ++d)
            if (c.rank_at(d) > 0)
                throw std::invalid_argument("pi0_adjunction_check: complex not connective");
    Pi0Witness w;
    w.lhs = hom_fg(homology(c).at(0), a);
    w.rhs = hyper_ext(c, free_resolution(a), 0);
    w.ok = (w.lhs == w.rhs);
    return w;
}

}  // namespace homkit
