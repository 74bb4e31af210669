#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace katop {

/// Square 0/1 matrix with bitset rows; the elements of a transition monoid.
class BoolMatrix {
public:
    using Word = std::uint64_t;

    BoolMatrix() = default;
    /// Zero matrix.
    explicit BoolMatrix(std::size_t dim);

    static BoolMatrix identity(std::size_t dim);
    static BoolMatrix full(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    bool get(std::size_t i, std::size_t j) const noexcept {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
    }
    void set(std::size_t i, std::size_t j, bool value = true) noexcept;

    std::span<const Word> row(std::size_t i) const noexcept { return {bits_.data() + i * words_, words_}; }

    bool is_zero() const noexcept;
    std::size_t count() const noexcept;

    /// Boolean matrix product.
    BoolMatrix operator*(const BoolMatrix& rhs) const;
    BoolMatrix& operator|=(const BoolMatrix& rhs);
    /// Least reflexive-transitive matrix containing this one (Warshall).
    BoolMatrix star() const;

    /// Some (i, f) with i ∈ rows and f ∈ cols is set. `cols` is a row-shaped mask.
    bool meets(std::span<const std::size_t> rows, std::span<const Word> cols) const;

    std::size_t hash() const noexcept;
    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> bits_;
};

BoolMatrix mat_mul(const BoolMatrix& x, const BoolMatrix& y);
BoolMatrix mat_star(const BoolMatrix& x);
BoolMatrix mat_id(std::size_t dim);

/// Row-shaped bit mask of width `dim`.
std::vector<BoolMatrix::Word> make_mask(std::size_t dim, std::span<const std::size_t> members);

}  // namespace katop
