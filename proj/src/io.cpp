#include <hrg/io.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <algorithm>
#include <ostream>
#include <sstream>
#include <string_view>

namespace hrg {

DataError::DataError(const std::string& what, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what)
    , line_(line)
{}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

constexpr std::string_view HEADER_PREFIX = "# hrg v1 ";

template <typename T>
T parse_number(std::string_view text, std::size_t line, std::string_view what) {
    T value{};
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty())
        throw DataError("invalid " + std::string(what) + " '" + std::string(text) + "'", line);
    return value;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
        if (tab == std::string_view::npos)
            return out;
        start = tab + 1;
    }
}

std::string_view strip_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r')
        s.remove_suffix(1);
    return s;
}

}  // namespace

void write_coordinates(std::ostream& out, const PointSet& points) {
    const auto& p = points.params();
    out << HEADER_PREFIX << "n=" << p.n() << " alpha=" << format_double(p.alpha()) << " C=" << format_double(p.C())
        << " R=" << format_double(p.R()) << " seed=" << points.seed() << " mode=" << to_string(points.mode()) << '\n';
    for (std::size_t i = 0; i < points.size(); ++i)
        out << i << '\t' << format_double(points[i].r) << '\t' << format_double(points[i].phi) << '\n';
}

PointSet read_coordinates(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw DataError("missing coordinate header", 1);
    std::string_view header = strip_cr(line);
    if (header.substr(0, HEADER_PREFIX.size()) != HEADER_PREFIX)
        throw DataError("coordinate header must start with '# hrg v1'", 1);
    header.remove_prefix(HEADER_PREFIX.size());

    std::map<std::string, std::string, std::less<>> fields;
    std::istringstream tokens{std::string(header)};
    std::string token;
    while (tokens >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw DataError("malformed header field '" + token + "'", 1);
        fields[token.substr(0, eq)] = token.substr(eq + 1);
    }
    auto field = [&](const char* key) -> const std::string& {
        const auto it = fields.find(key);
        if (it == fields.end())
            throw DataError(std::string("header lacks '") + key + "'", 1);
        return it->second;
    };

    const auto n = parse_number<std::uint64_t>(field("n"), 1, "n");
    const auto alpha = parse_number<double>(field("alpha"), 1, "alpha");
    const auto C = parse_number<double>(field("C"), 1, "C");
    const auto R = parse_number<double>(field("R"), 1, "R");
    const auto seed = parse_number<std::uint64_t>(field("seed"), 1, "seed");
    SamplingMode mode;
    try {
        mode = parse_sampling_mode(field("mode"));
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what(), 1);
    }
    std::optional<ModelParams> params;
    try {
        params.emplace(n, alpha, C);
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what(), 1);
    }
    if (params->R() != R)
        throw DataError("R does not equal 2 ln n + C", 1);

    std::vector<PolarPoint> points;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = strip_cr(line);
        if (text.empty())
            continue;
        const auto cols = split_tabs(text);
        if (cols.size() != 3)
            throw DataError("expected '<id>\\t<r>\\t<phi>'", line_no);
        const auto id = parse_number<std::uint64_t>(cols[0], line_no, "node id");
        if (id != points.size())
            throw DataError("node ids must be consecutive from 0", line_no);
        const auto r = parse_number<double>(cols[1], line_no, "radius");
        const auto phi = parse_number<double>(cols[2], line_no, "angle");
        if (!(r >= 0.0 && r <= params->R()) || !(phi >= 0.0 && phi < TWO_PI))
            throw DataError("coordinate outside the disc", line_no);
        points.emplace_back(r, phi);
    }
    if (mode == SamplingMode::FixedN && points.size() != n)
        throw DataError("fixed-n file holds " + std::to_string(points.size()) + " nodes, header says " +
                            std::to_string(n),
                        line_no);
    std::string method;
    if (mode == SamplingMode::Poisson)
        method = static_cast<double>(n) < 10.0 ? "inversion" : "std::poisson_distribution";
    return PointSet(*params, std::move(points), mode, seed, std::move(method));
}

void write_edges(std::ostream& out, const Graph& g) {
    for (const Edge& e : g.edges())
        out << e.u << '\t' << e.v << '\n';
}

std::vector<Edge> read_edges(std::istream& in, std::size_t node_count) {
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = strip_cr(line);
        if (text.empty())
            continue;
        const auto cols = split_tabs(text);
        if (cols.size() != 2)
            throw DataError("expected '<u>\\t<v>'", line_no);
        const auto u = parse_number<std::uint64_t>(cols[0], line_no, "node id");
        const auto v = parse_number<std::uint64_t>(cols[1], line_no, "node id");
        if (u >= node_count || v >= node_count)
            throw DataError("edge references node " + std::to_string(std::max(u, v)) + " but only " +
                                std::to_string(node_count) + " nodes exist",
                            line_no);
        if (u == v)
            throw DataError("self-loop", line_no);
        edges.push_back({static_cast<NodeId>(std::min(u, v)), static_cast<NodeId>(std::max(u, v))});
    }
    return edges;
}

namespace {

std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

void save_coordinates(const std::filesystem::path& path, const PointSet& points) {
    auto out = open_out(path);
    write_coordinates(out, points);
    finish(out, path);
}

PointSet load_coordinates(const std::filesystem::path& path) {
    auto in = open_in(path);
    return read_coordinates(in);
}

void save_edges(const std::filesystem::path& path, const Graph& g) {
    auto out = open_out(path);
    write_edges(out, g);
    finish(out, path);
}

std::vector<Edge> load_edges(const std::filesystem::path& path, std::size_t node_count) {
    auto in = open_in(path);
    return read_edges(in, node_count);
}

Graph load_graph(const std::filesystem::path& coords, const std::filesystem::path& edges) {
    PointSet points = load_coordinates(coords);
    const auto edge_list = load_edges(edges, points.size());
    return Graph::from_edges(std::move(points), edge_list);
}

}  // namespace hrg
