#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace gm {

// Half-open axis-aligned box [lower, upper). Always nonempty.
struct Box {
    RatVec lower;
    RatVec upper;

    size_t dim() const { return lower.size(); }
    Rat volume() const;
    bool contains(const RatVec& p) const;
    Box translated(const RatVec& v) const;
    RatVec midpoint() const;

    bool operator==(const Box& other) const = default;
};

Box make_box(RatVec lower, RatVec upper);
std::optional<Box> box_intersect(const Box& a, const Box& b);
bool boxes_intersect(const Box& a, const Box& b);
// a minus b as disjoint pieces (at most 2*dim of them).
std::vector<Box> box_subtract(const Box& a, const Box& b);

class BoxSet;
// Nonempty intersection test without building the intersection.
bool overlaps(const BoxSet& a, const BoxSet& b);

// Finite union of disjoint half-open boxes in canonical form: the
// minimal slab decomposition along axis 0 with canonical cross
// sections, so set equality is list equality.
class BoxSet {
  public:
    BoxSet() : dim_(0) {}
    explicit BoxSet(size_t dim) : dim_(dim) {}

    // Union of the given (possibly overlapping) boxes.
    static BoxSet from_boxes(size_t dim, std::vector<Box> boxes);
    static BoxSet empty(size_t dim) { return BoxSet(dim); }
    static BoxSet from_box(const Box& b) { return from_boxes(b.dim(), {b}); }

    size_t dim() const { return dim_; }
    const std::vector<Box>& boxes() const { return boxes_; }
    bool is_empty() const { return boxes_.empty(); }
    size_t size() const { return boxes_.size(); }

    Rat measure() const;
    bool contains_point(const RatVec& p) const;
    // Tight bounding box; nullopt when empty.
    std::optional<Box> bounding_box() const;

    BoxSet translated(const RatVec& v) const;
    BoxSet unite(const BoxSet& other) const;
    BoxSet intersect(const BoxSet& other) const;
    BoxSet subtract(const BoxSet& other) const;

    bool operator==(const BoxSet& other) const = default;

    std::string str() const;

  private:
    size_t dim_;
    std::vector<Box> boxes_;
};

}  // namespace gm
