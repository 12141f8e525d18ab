#include "region.hpp"

#include <algorithm>

#include "error.hpp"

namespace gm {

Rat Box::volume() const {
    Rat v = 1;
    for (size_t i = 0; i < dim(); ++i) v *= upper[i] - lower[i];
    return v;
}

bool Box::contains(const RatVec& p) const {
    for (size_t i = 0; i < dim(); ++i)
        if (p[i] < lower[i] || p[i] >= upper[i]) return false;
    return true;
}

Box Box::translated(const RatVec& v) const {
    return Box{lower + v, upper + v};
}

RatVec Box::midpoint() const {
    RatVec m(dim());
    for (size_t i = 0; i < dim(); ++i) m[i] = (lower[i] + upper[i]) / 2;
    return m;
}

Box make_box(RatVec lower, RatVec upper) {
    if (lower.size() != upper.size()) fail_input("box corner dimension mismatch");
    for (size_t i = 0; i < lower.size(); ++i)
        if (!(lower[i] < upper[i])) fail_input("box must satisfy lower < upper on every axis");
    return Box{std::move(lower), std::move(upper)};
}

std::optional<Box> box_intersect(const Box& a, const Box& b) {
    Box r{a.lower, a.upper};
    for (size_t i = 0; i < a.dim(); ++i) {
        r.lower[i] = std::max(a.lower[i], b.lower[i]);
        r.upper[i] = std::min(a.upper[i], b.upper[i]);
        if (!(r.lower[i] < r.upper[i])) return std::nullopt;
    }
    return r;
}

bool boxes_intersect(const Box& a, const Box& b) {
    for (size_t i = 0; i < a.dim(); ++i)
        if (std::max(a.lower[i], b.lower[i]) >= std::min(a.upper[i], b.upper[i])) return false;
    return true;
}

std::vector<Box> box_subtract(const Box& a, const Box& b) {
    auto core = box_intersect(a, b);
    if (!core) return {a};
    std::vector<Box> out;
    Box rest = a;
    for (size_t i = 0; i < a.dim(); ++i) {
        if (rest.lower[i] < core->lower[i]) {
            Box left = rest;
            left.upper[i] = core->lower[i];
            out.push_back(left);
        }
        if (core->upper[i] < rest.upper[i]) {
            Box right = rest;
            right.lower[i] = core->upper[i];
            out.push_back(right);
        }
        rest.lower[i] = core->lower[i];
        rest.upper[i] = core->upper[i];
    }
    return out;
}

namespace {

// Canonical decomposition of a union of boxes over axes [axis, dim):
// slabs along `axis` are maximal intervals with a constant (canonical)
// cross section, found by refining at every box boundary and merging
// equal neighbours. Unique for a given point set by induction on dim.
std::vector<Box> canonical_rec(const std::vector<Box>& boxes, size_t axis, size_t dim) {
    if (boxes.empty()) return {};
    if (axis == dim) return {Box{RatVec{}, RatVec{}}};

    std::vector<Rat> cuts;
    cuts.reserve(boxes.size() * 2);
    for (const auto& b : boxes) {
        cuts.push_back(b.lower[0]);
        cuts.push_back(b.upper[0]);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    struct Slab {
        Rat lo, hi;
        std::vector<Box> cs;  // canonical cross section over the remaining axes
    };
    std::vector<Slab> slabs;
    for (size_t t = 0; t + 1 < cuts.size(); ++t) {
        std::vector<Box> sub;
        for (const auto& b : boxes)
            if (b.lower[0] <= cuts[t] && b.upper[0] >= cuts[t + 1])
                sub.push_back(Box{RatVec(b.lower.begin() + 1, b.lower.end()),
                                  RatVec(b.upper.begin() + 1, b.upper.end())});
        auto cs = canonical_rec(sub, axis + 1, dim);
        if (cs.empty()) continue;
        if (!slabs.empty() && slabs.back().hi == cuts[t] && slabs.back().cs == cs)
            slabs.back().hi = cuts[t + 1];
        else
            slabs.push_back(Slab{cuts[t], cuts[t + 1], std::move(cs)});
    }

    std::vector<Box> out;
    for (const auto& s : slabs)
        for (const auto& c : s.cs) {
            Box b;
            b.lower.reserve(dim - axis);
            b.upper.reserve(dim - axis);
            b.lower.push_back(s.lo);
            b.upper.push_back(s.hi);
            b.lower.insert(b.lower.end(), c.lower.begin(), c.lower.end());
            b.upper.insert(b.upper.end(), c.upper.begin(), c.upper.end());
            out.push_back(std::move(b));
        }
    return out;
}

}  // namespace

BoxSet BoxSet::from_boxes(size_t dim, std::vector<Box> boxes) {
    for (const auto& b : boxes) {
        if (b.dim() != dim) fail_input("box dimension mismatch in box set");
        for (size_t i = 0; i < dim; ++i)
            if (!(b.lower[i] < b.upper[i])) fail_input("degenerate box in box set");
    }
    BoxSet s(dim);
    s.boxes_ = canonical_rec(boxes, 0, dim);
    return s;
}

Rat BoxSet::measure() const {
    Rat m = 0;
    for (const auto& b : boxes_) m += b.volume();
    return m;
}

bool BoxSet::contains_point(const RatVec& p) const {
    for (const auto& b : boxes_)
        if (b.contains(p)) return true;
    return false;
}

std::optional<Box> BoxSet::bounding_box() const {
    if (boxes_.empty()) return std::nullopt;
    Box bb = boxes_[0];
    for (const auto& b : boxes_)
        for (size_t i = 0; i < dim_; ++i) {
            bb.lower[i] = std::min(bb.lower[i], b.lower[i]);
            bb.upper[i] = std::max(bb.upper[i], b.upper[i]);
        }
    return bb;
}

BoxSet BoxSet::translated(const RatVec& v) const {
    if (v.size() != dim_) fail_input("translation vector dimension mismatch");
    BoxSet s(dim_);
    s.boxes_.reserve(boxes_.size());
    for (const auto& b : boxes_) s.boxes_.push_back(b.translated(v));
    return s;
}

BoxSet BoxSet::unite(const BoxSet& other) const {
    if (dim_ != other.dim_) fail_input("box set dimension mismatch");
    std::vector<Box> all = boxes_;
    all.insert(all.end(), other.boxes_.begin(), other.boxes_.end());
    return from_boxes(dim_, std::move(all));
}

BoxSet BoxSet::intersect(const BoxSet& other) const {
    if (dim_ != other.dim_) fail_input("box set dimension mismatch");
    std::vector<Box> out;
    for (const auto& a : boxes_)
        for (const auto& b : other.boxes_)
            if (auto c = box_intersect(a, b)) out.push_back(*c);
    return from_boxes(dim_, std::move(out));
}

BoxSet BoxSet::subtract(const BoxSet& other) const {
    if (dim_ != other.dim_) fail_input("box set dimension mismatch");
    std::vector<Box> out;
    for (const auto& a : boxes_) {
        std::vector<Box> pieces{a};
        for (const auto& b : other.boxes_) {
            std::vector<Box> next;
            for (const auto& p : pieces) {
                auto sub = box_subtract(p, b);
                next.insert(next.end(), sub.begin(), sub.end());
            }
            pieces = std::move(next);
            if (pieces.empty()) break;
        }
        out.insert(out.end(), pieces.begin(), pieces.end());
    }
    return from_boxes(dim_, std::move(out));
}

bool overlaps(const BoxSet& a, const BoxSet& b) {
    for (const auto& x : a.boxes())
        for (const auto& y : b.boxes())
            if (boxes_intersect(x, y)) return true;
    return false;
}

std::string BoxSet::str() const {
    if (boxes_.empty()) return "{}";
    std::string s;
    for (const auto& b : boxes_) {
        if (!s.empty()) s += " u ";
        s += "[" + vec_str(b.lower) + ", " + vec_str(b.upper) + ")";
    }
    return s;
}

}  // namespace gm
