#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lctr {

using Part = std::uint64_t;

// An integer partition: a non-increasing list of positive parts. Immutable
// once constructed.
class Partition {
public:
    Partition() = default;

    // Throws NotAPartition if parts increase anywhere or contain a zero, and
    // ArithmeticOverflow if the box count does not fit in 64 bits.
    explicit Partition(std::vector<Part> parts);

    std::span<const Part> parts() const noexcept { return parts_; }
    std::size_t rows() const noexcept { return parts_.size(); }
    Part first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    std::uint64_t size() const noexcept { return n_; }
    bool empty() const noexcept { return parts_.empty(); }

    Part operator[](std::size_t k) const noexcept { return parts_[k]; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Part> parts_;
    std::uint64_t n_ = 0;
};

// Counts part reads made through SubpositionView. One counter per solver
// invocation; not thread-safe, and not meant to be shared.
struct ProbeCounter {
    std::uint64_t probes = 0;
};

// The subpartition lambda[i, j]: rows i.. of the base with j columns removed.
// Offsets past the diagram are legal and denote the empty partition. The view
// borrows the base partition; the base must outlive it.
class SubpositionView {
public:
    explicit SubpositionView(const Partition& base, std::uint64_t i = 0, std::uint64_t j = 0,
                             ProbeCounter* counter = nullptr) noexcept
        : base_(&base), i_(i), j_(j), counter_(counter) {}

    const Partition& base() const noexcept { return *base_; }
    std::uint64_t row_offset() const noexcept { return i_; }
    std::uint64_t col_offset() const noexcept { return j_; }
    ProbeCounter* counter() const noexcept { return counter_; }

    // Number of base rows at or below the row offset. An upper bound on the
    // number of rows of the subpartition; binary searches run over this range.
    std::uint64_t row_span() const noexcept {
        return i_ < base_->rows() ? base_->rows() - i_ : 0;
    }

private:
    const Partition* base_;
    std::uint64_t i_;
    std::uint64_t j_;
    ProbeCounter* counter_;
};

// Parses "6,4^2,2,1^2" style text. Whitespace around tokens is ignored; the
// empty string is the empty partition.
Partition parse_partition(std::string_view text);

// Canonical text with exponents for runs of two or more equal parts.
std::string to_string(const Partition& p);

// Conjugate via one binary search per column: O(first part * log rows).
Partition conjugate(const Partition& p);

// max(0, base[i + k] - j), or 0 past the last row. Counts one probe.
Part part_at(const SubpositionView& v, std::uint64_t k);

// Largest l with part_at(v, l - 1) >= col + 1, i.e. the length of column
// `col` of the subpartition. At most ceil(log2(row_span + 1)) probes.
std::uint64_t column_length(const SubpositionView& v, std::uint64_t col);

// Durfee length of the subpartition, 0 iff it is empty. At most
// ceil(log2(row_span + 1)) probes.
std::uint64_t durfee(const SubpositionView& v);

// Offsets add componentwise. Throws ArithmeticOverflow on wrap-around.
SubpositionView subposition(const SubpositionView& v, std::uint64_t di, std::uint64_t dj);

bool is_empty(const SubpositionView& v);

// Copies the subpartition out. Does not count probes.
Partition materialize(const SubpositionView& v);

// Largest l in [0, count] such that pred(1), ..., pred(l) all hold, for a
// predicate that is monotone (true then false). ceil(log2(count + 1)) calls.
template <typename Pred>
std::uint64_t rightmost_true(std::uint64_t count, Pred&& pred) {
    std::uint64_t lo = 0;          // pred known to hold for 1..lo
    std::uint64_t hi = count + 1;  // pred known to fail at hi (or out of range)
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (pred(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

enum class FamilyKind { Staircase, Rectangle, Gamma };

struct FamilySpec {
    FamilyKind kind;
    std::uint64_t r = 1;
    std::uint64_t c = 1;  // ignored for staircases
};

Partition make_family(const FamilySpec& spec);

std::string_view family_name(FamilyKind kind);
FamilyKind parse_family(std::string_view name);

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(unsigned n);

}  // namespace lctr
