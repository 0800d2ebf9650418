#include "trifree/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace trifree {

auto write_elist(const Graph &g) -> std::string
{
    std::string out = "p tf " + std::to_string(g.order()) + "\n";
    for (const auto &e : g.edges())
        out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

namespace {

    auto parse_int(std::string_view token, int line) -> long long
    {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw FormatError("line " + std::to_string(line) + ": expected an integer, got '" + std::string(token) + "'");
        return value;
    }

    auto tokens_of(std::string_view line) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
                ++j;
            if (j > i)
                out.push_back(line.substr(i, j - i));
            i = j;
        }
        return out;
    }

} // namespace

auto read_elist(std::string_view text) -> Graph
{
    int n = -1;
    std::vector<std::pair<long long, long long>> raw;
    std::vector<int> raw_lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto t = tokens_of(line);
        if (t.empty())
            continue;
        if (t[0] == "p") {
            if (n >= 0)
                throw FormatError("line " + std::to_string(line_no) + ": second problem line");
            if (t.size() != 3 || t[1] != "tf")
                throw FormatError("line " + std::to_string(line_no) + ": expected 'p tf <n>'");
            auto value = parse_int(t[2], line_no);
            if (value < 1 || value > kMaxOrder)
                throw FormatError("line " + std::to_string(line_no) + ": order must be between 1 and " +
                                  std::to_string(kMaxOrder));
            n = static_cast<int>(value);
        }
        else if (t[0] == "e") {
            if (n < 0)
                throw FormatError("line " + std::to_string(line_no) + ": edge before the problem line");
            if (t.size() != 3)
                throw FormatError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
            raw.emplace_back(parse_int(t[1], line_no), parse_int(t[2], line_no));
            raw_lines.push_back(line_no);
        }
        else {
            throw FormatError("line " + std::to_string(line_no) + ": unknown record '" + std::string(t[0]) + "'");
        }
    }
    if (n < 0)
        throw FormatError("missing 'p tf <n>' line");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [u, v] = raw[i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw FormatError("line " + std::to_string(raw_lines[i]) + ": endpoint out of range in (" +
                              std::to_string(u) + "," + std::to_string(v) + ")");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    try {
        return Graph::from_edge_list(n, edges);
    }
    catch (const GraphError &e) {
        throw FormatError(e.what());
    }
}

auto write_graph6(const Graph &g) -> std::string
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    }
    else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int bits = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

auto read_graph6(std::string_view text) -> Graph
{
    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw FormatError("empty graph6 input");
    text = text.substr(first, last - first + 1);
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        text.remove_prefix(header.size());
    if (text.find_first_of(" \t\r\n") != std::string_view::npos)
        throw FormatError("graph6 input holds more than one graph");
    for (char ch : text)
        if (ch < 63 || ch > 126)
            throw FormatError("graph6 byte out of range");
    std::size_t pos = 0;
    int n = 0;
    if (text.empty())
        throw FormatError("empty graph6 input");
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    }
    else {
        if (text.size() < 4 || text[1] == 126)
            throw FormatError("unsupported graph6 size field");
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
        pos = 4;
    }
    if (n < 1 || n > kMaxOrder)
        throw FormatError("graph6 order must be between 1 and " + std::to_string(kMaxOrder));
    std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t expected = (pairs + 5) / 6;
    if (text.size() - pos != expected)
        throw FormatError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                          std::to_string(expected));
    GraphBuilder b(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                b.add_edge(i, j);
        }
    if (pairs % 6 != 0) {
        int byte = text[pos + expected - 1] - 63;
        if (byte & ((1 << (6 - pairs % 6)) - 1))
            throw FormatError("graph6 padding bits must be zero");
    }
    return b.build();
}

auto read_graph(std::string_view text) -> Graph
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw FormatError("empty input");
    // graph6 never contains whitespace, so "p" followed by a blank is elist.
    bool elist_header = text[first] == 'p' && first + 1 < text.size() && (text[first + 1] == ' ' || text[first + 1] == '\t');
    if (text[first] == '#' || elist_header)
        return read_elist(text);
    return read_graph6(text);
}

auto write_dot(const Graph &g, const std::vector<std::string> &labels, std::string_view name) -> std::string
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (static_cast<int>(labels.size()) == g.order())
            out << " [label=\"" << labels[v] << "\"]";
        out << ";\n";
    }
    for (const auto &e : g.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

auto read_file(const std::string &path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace trifree
