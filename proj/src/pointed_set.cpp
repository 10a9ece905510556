#include "homkit/pointed_set.hpp"

#include <stdexcept>

namespace homkit {

PointedSet::PointedSet(Index n, std::vector<std::string> names)
    : size(n), labels(std::move(names)) {
    if (size < 1) throw std::invalid_argument("PointedSet: size must be >= 1");
    if (!labels.empty() && static_cast<Index>(labels.size()) != size)
        throw std::invalid_argument("PointedSet: label count mismatch");
}

std::string PointedSet::label(Index i) const {
    if (!labels.empty()) return labels[i];
    return i == 0 ? "*" : "e" + std::to_string(i);
}

PointedSet smash(const PointedSet& x, const PointedSet& y) {
    const Index n = (x.size - 1) * (y.size - 1) + 1;
    std::vector<std::string> labels;
    labels.reserve(n);
    labels.push_back("*");
    for (Index i = 1; i < x.size; ++i)
        for (Index j = 1; j < y.size; ++j)
            labels.push_back(x.label(i) + "^" + y.label(j));
    return PointedSet(n, std::move(labels));
}

Index smash_index(const PointedSet& x, const PointedSet& y, Index i, Index j) {
    if (i < 0 || i >= x.size || j < 0 || j >= y.size)
        throw std::invalid_argument("smash_index: out of range");
    if (i == 0 || j == 0) return 0;
    return 1 + (i - 1) * (y.size - 1) + (j - 1);
}

PointedSet wedge(const PointedSet& x, const PointedSet& y) {
    const Index n = x.size + y.size - 1;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (Index i = 0; i < x.size; ++i) labels.push_back(x.label(i));
    for (Index j = 1; j < y.size; ++j) labels.push_back(y.label(j));
    return PointedSet(n, std::move(labels));
}

Index wedge_index_left(const PointedSet& x, const PointedSet& y, Index i) {
    (void)y;
    if (i < 0 || i >= x.size) throw std::invalid_argument("wedge_index_left: out of range");
    return i;
}

Index wedge_index_right(const PointedSet& x, const PointedSet& y, Index j) {
    if (j < 0 || j >= y.size) throw std::invalid_argument("wedge_index_right: out of range");
    return j == 0 ? 0 : x.size + j - 1;
}

FgAbelianGroup free_abelian(const PointedSet& x) { return free_group(x.size - 1); }

PointedSet forget_to_pointed(const FgAbelianGroup& a) {
    if (!a.is_finite())
        throw std::invalid_argument("forget_to_pointed: group is infinite");
    FiniteGroupElements el(a);
    const Int n = el.order();
    if (!n.fits_slong_p())
        throw std::invalid_argument("forget_to_pointed: group too large");
    const Index size = static_cast<Index>(n.get_si());
    std::vector<std::string> labels;
    labels.reserve(size);
    for (Index i = 0; i < size; ++i) labels.push_back(el.label(el.element(i)));
    return PointedSet(size, std::move(labels));
}

Index smash_size_by_quotient(const PointedSet& x, const PointedSet& y) {
    // Quotient the Cartesian product by the wedge: every pair with a
    // basepoint coordinate collapses to a single class.
    Index classes = 0;
    bool basepoint_class_seen = false;
    for (Index i = 0; i < x.size; ++i)
        for (Index j = 0; j < y.size; ++j) {
            if (i == 0 || j == 0) {
                if (!basepoint_class_seen) {
                    basepoint_class_seen = true;
                    ++classes;
                }
            } else {
                ++classes;
            }
        }
    return classes;
}

}  // namespace homkit
