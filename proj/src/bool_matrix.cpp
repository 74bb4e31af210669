#include "katop/bool_matrix.hpp"

#include <bit>

#include "katop/errors.hpp"

namespace katop {

BoolMatrix::BoolMatrix(std::size_t dim) : dim_(dim), words_((dim + 63) / 64), bits_(dim * ((dim + 63) / 64), 0) {}

BoolMatrix BoolMatrix::identity(std::size_t dim) {
    BoolMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i);
    return m;
}

BoolMatrix BoolMatrix::full(std::size_t dim) {
    BoolMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.set(i, j);
    return m;
}

void BoolMatrix::set(std::size_t i, std::size_t j, bool value) noexcept {
    Word& w = bits_[i * words_ + j / 64];
    const Word mask = Word{1} << (j % 64);
    w = value ? (w | mask) : (w & ~mask);
}

bool BoolMatrix::is_zero() const noexcept {
    for (Word w : bits_)
        if (w) return false;
    return true;
}

std::size_t BoolMatrix::count() const noexcept {
    std::size_t n = 0;
    for (Word w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BoolMatrix BoolMatrix::operator*(const BoolMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw DimensionMismatch(dim_, rhs.dim_);
    BoolMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Word* dst = out.bits_.data() + i * words_;
        for (std::size_t k = 0; k < dim_; ++k) {
            if (!get(i, k)) continue;
            const Word* src = rhs.bits_.data() + k * words_;
            for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
        }
    }
    return out;
}

BoolMatrix& BoolMatrix::operator|=(const BoolMatrix& rhs) {
    if (dim_ != rhs.dim_) throw DimensionMismatch(dim_, rhs.dim_);
    for (std::size_t w = 0; w < bits_.size(); ++w) bits_[w] |= rhs.bits_[w];
    return *this;
}

BoolMatrix BoolMatrix::star() const {
    BoolMatrix out = *this;
    for (std::size_t i = 0; i < dim_; ++i) out.set(i, i);
    for (std::size_t k = 0; k < dim_; ++k) {
        const Word* rk = out.bits_.data() + k * words_;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (i == k || !out.get(i, k)) continue;
            Word* ri = out.bits_.data() + i * words_;
            for (std::size_t w = 0; w < words_; ++w) ri[w] |= rk[w];
        }
    }
    return out;
}

bool BoolMatrix::meets(std::span<const std::size_t> rows, std::span<const Word> cols) const {
    for (std::size_t i : rows) {
        const Word* r = bits_.data() + i * words_;
        for (std::size_t w = 0; w < words_; ++w)
            if (r[w] & cols[w]) return true;
    }
    return false;
}

std::size_t BoolMatrix::hash() const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ dim_;
    for (Word w : bits_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

BoolMatrix mat_mul(const BoolMatrix& x, const BoolMatrix& y) { return x * y; }
BoolMatrix mat_star(const BoolMatrix& x) { return x.star(); }
BoolMatrix mat_id(std::size_t dim) { return BoolMatrix::identity(dim); }

std::vector<BoolMatrix::Word> make_mask(std::size_t dim, std::span<const std::size_t> members) {
    std::vector<BoolMatrix::Word> mask((dim + 63) / 64, 0);
    for (std::size_t j : members) mask[j / 64] |= BoolMatrix::Word{1} << (j % 64);
    return mask;
}

}  // namespace katop
