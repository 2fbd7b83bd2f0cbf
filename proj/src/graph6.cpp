#include "grt/graph.hpp"

// graph6 codec. Bytes are printable ASCII 63..126 carrying 6 bits each
// (value = byte - 63). The header encodes n (one byte for n < 63, '~' plus
// three bytes for n < 2^18); the body packs the upper triangle of the
// adjacency matrix column by column, big-endian within each byte, zero-padded.

namespace grt {

namespace {

int sixbits(unsigned char c) {
    if (c < 63 || c > 126) throw parse_error("graph6: byte out of range");
    return c - 63;
}

} // namespace

Graph graph6_decode(const std::string& text) {
    std::string s = text;
    // tolerate the optional format header and one trailing newline
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw parse_error("graph6: empty input");

    size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(s[0]) != 126) {
        n = sixbits(s[0]);
        pos = 1;
    } else if (s.size() >= 4 && static_cast<unsigned char>(s[1]) != 126) {
        n = (static_cast<long long>(sixbits(s[1])) << 12) | (sixbits(s[2]) << 6) | sixbits(s[3]);
        pos = 4;
    } else {
        throw parse_error("graph6: unsupported or truncated size header");
    }

    long long bits = n * (n - 1) / 2;
    size_t body = static_cast<size_t>((bits + 5) / 6);
    if (s.size() - pos < body) throw parse_error("graph6: truncated bit field");
    if (s.size() - pos > body) throw parse_error("graph6: trailing bytes");

    std::vector<std::pair<int, int>> edges;
    long long bit_index = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            int byte = sixbits(s[pos + bit_index / 6]);
            int bit = (byte >> (5 - bit_index % 6)) & 1;
            if (bit) edges.emplace_back(i, j);
            ++bit_index;
        }
    // padding bits must be zero
    for (; bit_index < static_cast<long long>(body) * 6; ++bit_index) {
        int byte = sixbits(s[pos + bit_index / 6]);
        if ((byte >> (5 - bit_index % 6)) & 1)
            throw parse_error("graph6: nonzero padding bits");
    }
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const precondition_error& e) {
        throw parse_error(e.what());
    }
}

std::string graph6_encode(const Graph& g) {
    long long n = g.n();
    if (n > 258047) throw precondition_error("graph6: n too large for this encoder");
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    long long bits = n * (n - 1) / 2;
    std::string body(static_cast<size_t>((bits + 5) / 6), 0);
    long long bit_index = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (g.adjacent(i, j)) body[bit_index / 6] |= static_cast<char>(1 << (5 - bit_index % 6));
            ++bit_index;
        }
    for (char& c : body) c = static_cast<char>(c + 63);
    return out + body;
}

} // namespace grt
