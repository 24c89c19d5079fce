#include "labelkit/labeling.hpp"

#include "labelkit/degeneracy.hpp"

#include <bit>
#include <cmath>

namespace labelkit {

int field_width(int n)
{
    if (n <= 2)
        return 1;
    return std::bit_width(static_cast<unsigned>(n - 1));
}

SchemeParams SchemeParams::make(int n, int k)
{
    if (n < 0 || k < 0)
        throw DomainError("scheme: n and k must be non-negative");
    if (!(k < n || (n <= 1 && k == 0)))
        throw DomainError("scheme: need k < n (got n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")");
    if (n > Graph::max_vertices)
        throw DomainError("scheme: n exceeds " + std::to_string(Graph::max_vertices));
    return SchemeParams{n, k, field_width(n)};
}

Label Label::from_fields(std::span<const std::uint32_t> fields, int w)
{
    Label l;
    l.bits_ = fields.size() * static_cast<std::size_t>(w);
    l.bytes_.assign((l.bits_ + 7) / 8, 0);
    std::size_t pos = 0;
    for (std::uint32_t f : fields) {
        for (int b = w - 1; b >= 0; --b, ++pos)
            if ((f >> b) & 1u)
                l.bytes_[pos / 8] |= static_cast<std::uint8_t>(0x80u >> (pos % 8));
    }
    return l;
}

Label Label::from_hex(std::string_view hex, std::size_t bits)
{
    if (hex.size() % 2 != 0)
        throw HexFormatError("label '" + std::string(hex) + "': odd number of hex digits");
    const auto nibble = [&](char c) -> std::uint8_t {
        if (c >= '0' && c <= '9')
            return static_cast<std::uint8_t>(c - '0');
        if (c >= 'a' && c <= 'f')
            return static_cast<std::uint8_t>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F')
            return static_cast<std::uint8_t>(c - 'A' + 10);
        throw HexFormatError("label '" + std::string(hex) + "': not a hexadecimal string");
    };
    Label l;
    for (std::size_t i = 0; i < hex.size(); i += 2)
        l.bytes_.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
    if (l.bytes_.size() != (bits + 7) / 8)
        throw MalformedLabel("label '" + std::string(hex) + "': length mismatch, expected " + std::to_string(bits)
                             + " bits");
    l.bits_ = bits;
    return l;
}

bool Label::bit(std::size_t i) const
{
    return (bytes_.at(i / 8) >> (7 - i % 8)) & 1u;
}

std::uint32_t Label::field(std::size_t index, int w) const
{
    std::uint32_t v = 0;
    const std::size_t start = index * static_cast<std::size_t>(w);
    for (int b = 0; b < w; ++b)
        v = v << 1 | static_cast<std::uint32_t>(bit(start + static_cast<std::size_t>(b)));
    return v;
}

std::vector<std::uint32_t> Label::fields(int w) const
{
    std::vector<std::uint32_t> out;
    const std::size_t count = w > 0 ? bits_ / static_cast<std::size_t>(w) : 0;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(field(i, w));
    return out;
}

std::uint64_t Label::code() const
{
    if (bits_ > 64)
        throw DomainError("label longer than 64 bits has no integer code");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bits_; ++i)
        v = v << 1 | static_cast<std::uint64_t>(bit(i));
    return v;
}

std::string Label::to_hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes_.size() * 2);
    for (std::uint8_t b : bytes_) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

std::string Label::to_bit_string() const
{
    std::string s;
    s.reserve(bits_);
    for (std::size_t i = 0; i < bits_; ++i)
        s.push_back(bit(i) ? '1' : '0');
    return s;
}

namespace {

std::string describe(const Label& l)
{
    return "label " + l.to_hex();
}

} // namespace

void validate_label(const Label& label, const SchemeParams& p)
{
    if (label.bit_length() != p.label_bits())
        throw MalformedLabel(describe(label) + ": length mismatch (" + std::to_string(label.bit_length())
                             + " bits, scheme needs " + std::to_string(p.label_bits()) + ")");
    for (std::size_t i = p.label_bits(); i < label.bytes().size() * 8; ++i)
        if (label.bit(i))
            throw MalformedLabel(describe(label) + ": non-zero padding bits");
    for (int i = 0; i <= p.k; ++i)
        if (label.field(static_cast<std::size_t>(i), p.w) >= static_cast<std::uint32_t>(p.n))
            throw MalformedLabel(describe(label) + ": field " + std::to_string(i) + " is >= n = " + std::to_string(p.n));
}

bool is_well_formed(const Label& label, const SchemeParams& p)
{
    try {
        validate_label(label, p);
        return true;
    } catch (const MalformedLabel&) {
        return false;
    }
}

EncodedGraph encode(const Graph& g)
{
    const int n = g.vertex_count();
    const PeelOrdering p = degeneracy_ordering(g);
    return encode(g, SchemeParams::make(n, n <= 1 ? 0 : p.k));
}

EncodedGraph encode(const Graph& g, const SchemeParams& target)
{
    const int n = g.vertex_count();
    if (n > target.n)
        throw DomainError("encode: graph has " + std::to_string(n) + " vertices, scheme allows " + std::to_string(target.n));
    const PeelOrdering p = degeneracy_ordering(g);
    if (p.k > target.k)
        throw DomainError("encode: degeneracy " + std::to_string(p.k) + " exceeds k = " + std::to_string(target.k));

    EncodedGraph out{target, {}};
    out.labels.reserve(static_cast<std::size_t>(n));
    std::vector<std::uint32_t> fields(static_cast<std::size_t>(target.k + 1));
    for (int v = 0; v < n; ++v) {
        const auto own = static_cast<std::uint32_t>(p.position[static_cast<std::size_t>(v)]);
        std::fill(fields.begin(), fields.end(), own);
        const auto& later = p.later_neighbors[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < later.size(); ++i)
            fields[i + 1] = static_cast<std::uint32_t>(later[i]);
        out.labels.push_back(Label::from_fields(fields, target.w));
    }
    return out;
}

namespace {

bool lists(const Label& a, std::uint32_t target, std::uint32_t own, const SchemeParams& p)
{
    if (target == own)
        return false;
    for (int i = 1; i <= p.k; ++i)
        if (a.field(static_cast<std::size_t>(i), p.w) == target)
            return true;
    return false;
}

} // namespace

bool decode(const Label& a, const Label& b, const SchemeParams& p)
{
    validate_label(a, p);
    validate_label(b, p);
    const std::uint32_t fa = a.field(0, p.w);
    const std::uint32_t fb = b.field(0, p.w);
    return lists(a, fb, fa, p) || lists(b, fa, fb, p);
}

ClassLabelBound monotone_class_bound(double C, const GrowthFunction& f, int n)
{
    if (!(C > 0.0))
        throw DomainError("class bound: C must be positive");
    if (n < 2)
        throw DomainError("class bound: n must be >= 2");
    const double raw = std::floor(2.0 * C * f(static_cast<double>(n)));
    if (!(raw < 2147483647.0))
        throw DomainError("class bound: degeneracy bound overflows");
    ClassLabelBound b;
    b.degeneracy_bound = static_cast<int>(raw);
    b.label_bits = static_cast<std::size_t>(b.degeneracy_bound + 1) * static_cast<std::size_t>(field_width(n));
    return b;
}

} // namespace labelkit
