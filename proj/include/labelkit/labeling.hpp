#pragma once

#include "labelkit/error.hpp"
#include "labelkit/graph.hpp"
#include "labelkit/growth.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace labelkit {

/// max(1, ceil(log2 n)).
int field_width(int n);

struct SchemeParams {
    int n = 0;
    int k = 0;
    int w = 1;

    /// Throws DomainError unless k < n, or n <= 1 and k = 0.
    static SchemeParams make(int n, int k);

    std::size_t label_bits() const { return static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(w); }
    std::size_t label_bytes() const { return (label_bits() + 7) / 8; }

    friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

/// A label string that is structurally wrong for its scheme: wrong length,
/// a field >= n, or non-zero padding bits.
class MalformedLabel : public DomainError {
public:
    using DomainError::DomainError;
};

/// Bit string of k+1 fields of w bits, most significant bit first, stored
/// zero-padded to whole bytes.
class Label {
public:
    Label() = default;

    static Label from_fields(std::span<const std::uint32_t> fields, int w);
    /// Throws HexFormatError on characters outside [0-9a-fA-F] or odd length,
    /// MalformedLabel when the byte count does not match `bits`.
    static Label from_hex(std::string_view hex, std::size_t bits);

    std::size_t bit_length() const noexcept { return bits_; }
    bool bit(std::size_t i) const;
    std::uint32_t field(std::size_t index, int w) const;
    std::vector<std::uint32_t> fields(int w) const;
    /// The label bits as an integer (first bit most significant); needs bit_length() <= 64.
    std::uint64_t code() const;

    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
    std::string to_hex() const;
    std::string to_bit_string() const;

    friend bool operator==(const Label&, const Label&) = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t bits_ = 0;
};

/// Throws MalformedLabel unless the label is well-formed for p.
void validate_label(const Label& label, const SchemeParams& p);
bool is_well_formed(const Label& label, const SchemeParams& p);

struct EncodedGraph {
    SchemeParams params;
    /// labels[v] belongs to vertex v of the encoded graph.
    std::vector<Label> labels;
};

/// Labels built from the degeneracy ordering: own position, then positions
/// of later neighbours, padded with the own position.
EncodedGraph encode(const Graph& g);

/// Encodes into a larger scheme (target.n >= n, target.k >= degeneracy).
EncodedGraph encode(const Graph& g, const SchemeParams& target);

/// Adjacency from two well-formed labels: one label lists the other's
/// position among its neighbour fields. Throws MalformedLabel.
bool decode(const Label& a, const Label& b, const SchemeParams& p);

struct ClassLabelBound {
    int degeneracy_bound = 0;
    std::size_t label_bits = 0;
};

/// floor(2 C f(n)) and (floor(2 C f(n)) + 1) * max(1, ceil(log2 n)).
ClassLabelBound monotone_class_bound(double C, const GrowthFunction& f, int n);

} // namespace labelkit
