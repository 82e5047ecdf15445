#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nambu/rational.hpp"

namespace nambu {

// Small dense multi-index tensor of exact rationals, row-major storage.
// Dimensions in scope are <= 16, so N^k dense storage is trivial.
// Immutable by convention once a structure is built; mutation is only used
// while assembling.
class Tensor {
   public:
    explicit Tensor(std::vector<std::size_t> dims);

    std::size_t rank() const { return dims_.size(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t size() const { return entries_.size(); }

    // Bounds-checked access, 0-based indices.
    const Rational& at(std::span<const std::size_t> idx) const;
    Rational& at(std::span<const std::size_t> idx);
    const Rational& at(std::initializer_list<std::size_t> idx) const;
    Rational& at(std::initializer_list<std::size_t> idx);

    // Signed average over all permutations of the listed axes. The result is
    // exactly antisymmetric in them; applying twice equals applying once.
    // Throws ShapeError if the axes have unequal extents.
    Tensor antisymmetrized(std::vector<std::size_t> axes) const;

    bool is_zero() const;
    bool operator==(const Tensor& other) const = default;

    const std::vector<Rational>& entries() const { return entries_; }

   private:
    std::size_t offset(std::span<const std::size_t> idx) const;

    std::vector<std::size_t> dims_;
    std::vector<Rational> entries_;
};

}  // namespace nambu
