#include "lctr/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

#include "lctr/errors.hpp"

namespace lctr {

namespace {

// Upper bound on the expanded length of parsed text, so that "1^99999999999"
// fails cleanly instead of exhausting memory.
constexpr std::uint64_t kMaxParsedParts = std::uint64_t{1} << 26;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_positive(std::string_view s, std::size_t token, const char* what) {
    s = trim(s);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("token " + std::to_string(token) + ": malformed " + what + " '" +
                             std::string(s) + "'",
                         token);
    }
    if (value == 0) {
        throw ParseError("token " + std::to_string(token) + ": " + what + " must be positive",
                         token);
    }
    return value;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        throw ArithmeticOverflow("offset or box count exceeds 64 bits");
    }
    return a + b;
}

}  // namespace

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] == 0) {
            throw NotAPartition("part " + std::to_string(k) + " is zero", k);
        }
        if (k > 0 && parts_[k] > parts_[k - 1]) {
            throw NotAPartition("part " + std::to_string(k) + " (" + std::to_string(parts_[k]) +
                                    ") exceeds its predecessor (" +
                                    std::to_string(parts_[k - 1]) + ")",
                                k);
        }
        n_ = checked_add(n_, parts_[k]);
    }
}

Partition parse_partition(std::string_view text) {
    std::vector<Part> parts;
    if (trim(text).empty()) return Partition{};

    std::size_t token = 0;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view tok =
            text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        const std::size_t caret = tok.find('^');
        const std::uint64_t value = parse_positive(tok.substr(0, caret), token, "part");
        std::uint64_t repeat = 1;
        if (caret != std::string_view::npos) {
            repeat = parse_positive(tok.substr(caret + 1), token, "exponent");
        }
        if (repeat > kMaxParsedParts - parts.size()) {
            throw ParseError("token " + std::to_string(token) + ": too many parts", token);
        }
        parts.insert(parts.end(), repeat, value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
        ++token;
    }
    return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
    std::ostringstream out;
    const auto parts = p.parts();
    for (std::size_t k = 0; k < parts.size();) {
        std::size_t run = 1;
        while (k + run < parts.size() && parts[k + run] == parts[k]) ++run;
        if (k > 0) out << ',';
        out << parts[k];
        if (run >= 2) out << '^' << run;
        k += run;
    }
    return out.str();
}

Partition conjugate(const Partition& p) {
    std::vector<Part> result;
    result.reserve(p.first());
    const SubpositionView whole(p);
    for (Part col = 0; col < p.first(); ++col) {
        result.push_back(column_length(whole, col));
    }
    return Partition(std::move(result));
}

Part part_at(const SubpositionView& v, std::uint64_t k) {
    if (v.counter() != nullptr) ++v.counter()->probes;
    const std::uint64_t span = v.row_span();
    if (k >= span) return 0;
    const Part value = v.base()[v.row_offset() + k];
    return value > v.col_offset() ? value - v.col_offset() : 0;
}

std::uint64_t column_length(const SubpositionView& v, std::uint64_t col) {
    return rightmost_true(v.row_span(), [&](std::uint64_t len) { return part_at(v, len - 1) > col; });
}

std::uint64_t durfee(const SubpositionView& v) {
    return rightmost_true(v.row_span(), [&](std::uint64_t len) { return part_at(v, len - 1) >= len; });
}

SubpositionView subposition(const SubpositionView& v, std::uint64_t di, std::uint64_t dj) {
    return SubpositionView(v.base(), checked_add(v.row_offset(), di), checked_add(v.col_offset(), dj),
                           v.counter());
}

bool is_empty(const SubpositionView& v) { return part_at(v, 0) == 0; }

Partition materialize(const SubpositionView& v) {
    std::vector<Part> parts;
    const auto base = v.base().parts();
    for (std::uint64_t k = v.row_offset(); k < base.size() && base[k] > v.col_offset(); ++k) {
        parts.push_back(base[k] - v.col_offset());
    }
    return Partition(std::move(parts));
}

Partition make_family(const FamilySpec& spec) {
    if (spec.r == 0) throw InvalidFamilyParam("family parameter r must be at least 1");
    if (spec.kind != FamilyKind::Staircase && spec.c == 0) {
        throw InvalidFamilyParam("family parameter c must be at least 1");
    }
    std::vector<Part> parts;
    parts.reserve(spec.r);
    switch (spec.kind) {
        case FamilyKind::Staircase:
            for (std::uint64_t k = spec.r; k >= 1; --k) parts.push_back(k);
            break;
        case FamilyKind::Rectangle:
            parts.assign(spec.r, spec.c);
            break;
        case FamilyKind::Gamma:
            parts.assign(spec.r, 1);
            parts.front() = spec.c;
            break;
    }
    return Partition(std::move(parts));
}

std::string_view family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Staircase: return "staircase";
        case FamilyKind::Rectangle: return "rectangle";
        case FamilyKind::Gamma: return "gamma";
    }
    return "?";
}

FamilyKind parse_family(std::string_view name) {
    if (name == "staircase") return FamilyKind::Staircase;
    if (name == "rectangle") return FamilyKind::Rectangle;
    if (name == "gamma") return FamilyKind::Gamma;
    throw InvalidFamilyParam("unknown family '" + std::string(name) + "'");
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<Part> current;
    // Parts are chosen largest first, each no larger than the previous one.
    auto rec = [&](auto&& self, unsigned remaining, Part cap) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (Part part = std::min<Part>(cap, remaining); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - static_cast<unsigned>(part), part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace lctr
