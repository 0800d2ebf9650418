#include "trifree/families.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace trifree {

auto to_string(const AndrasfaiId &id) -> std::string
{
    return "Andrasfai(" + std::to_string(id.k) + ")";
}

auto to_string(const VegaId &id) -> std::string
{
    return "Vega(" + std::to_string(id.i) + "," + std::to_string(id.mu) + "," + std::to_string(id.nu) + ")";
}

auto to_string(Colour c) -> std::string
{
    switch (c) {
    case Colour::Red:
        return "red";
    case Colour::Green:
        return "green";
    case Colour::Blue:
        return "blue";
    }
    return "?";
}

// Labelings

auto VegaLabeling::inner_vertex(int label) const -> std::optional<Vertex>
{
    if (label < 0 || label >= inner_count())
        return std::nullopt;
    return inner[label];
}

auto VegaLabeling::inner_label(Vertex vertex) const -> int
{
    for (int j = 0; j < inner_count(); ++j)
        if (inner[j] == vertex)
            return j;
    return -1;
}

auto VegaLabeling::colour_of_label(int label) const -> Colour
{
    if (label < id.i)
        return Colour::Red;
    if (label < 2 * id.i)
        return Colour::Green;
    return Colour::Blue;
}

auto VegaLabeling::colour_class(Colour c) const -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    for (int j = 0; j < inner_count(); ++j)
        if (inner[j] && colour_of_label(j) == c)
            out.push_back(*inner[j]);
    return out;
}

auto VegaLabeling::name(Vertex vertex) const -> std::string
{
    if (int j = inner_label(vertex); j >= 0)
        return std::to_string(j);
    const std::pair<Vertex, const char *> named[] = {{a, "a"}, {v, "v"}, {c, "c"}, {u, "u"}, {b, "b"}, {w, "w"}, {x, "x"}};
    for (auto [vx, nm] : named)
        if (vx == vertex)
            return nm;
    if (y && *y == vertex)
        return "y";
    throw PreconditionError("vertex " + std::to_string(vertex) + " is not part of " + to_string(id));
}

auto VegaLabeling::vertex(const std::string &nm) const -> Vertex
{
    if (nm == "a")
        return a;
    if (nm == "v")
        return v;
    if (nm == "c")
        return c;
    if (nm == "u")
        return u;
    if (nm == "b")
        return b;
    if (nm == "w")
        return w;
    if (nm == "x")
        return x;
    if (nm == "y") {
        if (!y)
            throw PreconditionError("vertex y is absent from " + to_string(id));
        return *y;
    }
    std::size_t used = 0;
    int j = -1;
    try {
        j = std::stoi(nm, &used);
    }
    catch (const std::exception &) {
        used = 0;
    }
    if (used != nm.size() || !inner_vertex(j))
        throw PreconditionError("vertex " + nm + " is absent from " + to_string(id));
    return *inner_vertex(j);
}

auto UpsilonLabeling::name(Vertex v) -> std::string
{
    if (v == c)
        return "c";
    if (v >= 0 && v < 5)
        return "a" + std::to_string(v);
    if (v >= 5 && v < 10)
        return "b" + std::to_string(v - 5);
    throw PreconditionError("vertex " + std::to_string(v) + " is not a Mycielski-Grotzsch vertex");
}

// Constructors

namespace {

    auto circulant(int n, const std::vector<int> &connection) -> Graph
    {
        GraphBuilder b(n);
        for (Vertex v = 0; v < n; ++v)
            for (auto d : connection)
                b.ensure_edge(v, (v + d) % n);
        return b.build();
    }

} // namespace

auto andrasfai(AndrasfaiId id) -> Graph
{
    if (id.k < 1)
        throw PreconditionError("Andrasfai parameter k must be at least 1");
    if (3 * id.k - 1 > kMaxOrder)
        throw PreconditionError("Andrasfai graph exceeds the vertex capacity");
    std::vector<int> connection;
    for (int d = id.k; d <= 2 * id.k - 1; ++d)
        connection.push_back(d);
    return circulant(3 * id.k - 1, connection);
}

auto mycielski_grotzsch() -> LabeledUpsilon
{
    using L = UpsilonLabeling;
    GraphBuilder b(11);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(L::a(i), L::c);
        b.add_edge(L::a(i), L::b(i + 2));
        b.add_edge(L::a(i), L::b(i - 2));
        b.add_edge(L::b(i), L::b(i + 2));
    }
    return {b.build(), L{}};
}

auto vega(VegaId id) -> LabeledVega
{
    if (id.i < 2)
        throw PreconditionError("Vega parameter i must be at least 2");
    if ((id.mu != 0 && id.mu != 1) || (id.nu != 0 && id.nu != 1))
        throw PreconditionError("Vega parameters mu and nu must be 0 or 1");
    if (id.order() > kMaxOrder)
        throw PreconditionError("Vega graph exceeds the vertex capacity");

    const int i = id.i;
    const int inner_n = 3 * i - 1;
    VegaLabeling L;
    L.id = id;
    L.inner.assign(inner_n, std::nullopt);
    Vertex next = 0;
    for (int j = 0; j < inner_n; ++j)
        if (!(id.nu == 1 && j == 2 * i - 1))
            L.inner[j] = next++;
    L.a = next++;
    L.v = next++;
    L.c = next++;
    L.u = next++;
    L.b = next++;
    L.w = next++;
    L.x = next++;
    if (id.mu == 0)
        L.y = next++;

    GraphBuilder g(next);
    for (int j = 0; j < inner_n; ++j)
        for (int l = j + 1; l < inner_n; ++l) {
            int d = l - j;
            if (L.inner[j] && L.inner[l] && d >= i && d <= 2 * i - 1)
                g.add_edge(*L.inner[j], *L.inner[l]);
        }
    g.add_edge(L.a, L.v);
    g.add_edge(L.v, L.c);
    g.add_edge(L.c, L.u);
    g.add_edge(L.u, L.b);
    g.add_edge(L.b, L.w);
    g.add_edge(L.w, L.a);
    for (int j = 0; j < inner_n; ++j) {
        if (!L.inner[j])
            continue;
        switch (L.colour_of_label(j)) {
        case Colour::Red:
            g.add_edge(*L.inner[j], L.a);
            g.add_edge(*L.inner[j], L.u);
            break;
        case Colour::Green:
            g.add_edge(*L.inner[j], L.b);
            g.add_edge(*L.inner[j], L.v);
            break;
        case Colour::Blue:
            g.add_edge(*L.inner[j], L.c);
            g.add_edge(*L.inner[j], L.w);
            break;
        }
    }
    g.add_edge(L.x, L.a);
    g.add_edge(L.x, L.b);
    g.add_edge(L.x, L.c);
    if (L.y) {
        g.add_edge(*L.y, L.u);
        g.add_edge(*L.y, L.v);
        g.add_edge(*L.y, L.w);
        g.add_edge(*L.y, L.x);
    }
    return {g.build(), std::move(L)};
}

auto cube() -> Graph
{
    GraphBuilder b(8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j)
                b.add_edge(i, 4 + j);
    return b.build();
}

auto graph_n() -> Graph
{
    auto a = [](int i) { return i % 3; };
    auto bb = [](int i) { return 3 + i % 3; };
    auto c = [](int i) { return 6 + i % 3; };
    GraphBuilder b(9);
    for (int i = 0; i < 3; ++i) {
        b.add_edge(a(i), c(i));
        b.add_edge(bb(i), c(i));
        for (int j = 0; j < 3; ++j)
            if (i != j)
                b.add_edge(a(i), bb(j));
    }
    return b.build();
}

auto cayley_6k(int k) -> Graph
{
    if (k < 1)
        throw PreconditionError("Cayley parameter k must be at least 1");
    if (6 * k > kMaxOrder)
        throw PreconditionError("Cayley graph exceeds the vertex capacity");
    std::vector<int> connection;
    for (int d = k; d <= 2 * k - 1; ++d) {
        connection.push_back(d);
        connection.push_back(6 * k - d);
    }
    return circulant(6 * k, connection);
}

auto fig41() -> Graph
{
    // a1..a8 -> 0..7, b1..b4 -> 8..11
    static const char *const pairs[][2] = {
        {"b1", "b2"}, {"b3", "b4"}, {"a2", "b1"}, {"b1", "b4"}, {"b4", "a5"}, {"a1", "a4"}, {"a4", "a7"}, {"a7", "a2"},
        {"a2", "a5"}, {"a5", "a8"}, {"a8", "a3"}, {"a3", "a6"}, {"a6", "a1"}, {"b1", "a3"}, {"a3", "a7"}, {"a7", "b3"},
        {"b4", "a4"}, {"a4", "a8"}, {"a8", "b2"}, {"a1", "b2"}, {"b2", "b3"}, {"b3", "a6"}, {"a1", "a5"}, {"a2", "a6"},
    };
    auto index = [](const char *nm) {
        int k = nm[1] - '1';
        return nm[0] == 'a' ? k : 8 + k;
    };
    GraphBuilder b(12);
    for (const auto &p : pairs)
        b.add_edge(index(p[0]), index(p[1]));
    return b.build();
}

auto haggkvist_spec() -> BlowupSpec
{
    BlowupSpec spec{mycielski_grotzsch().graph, std::vector<int>(11, 0)};
    for (int i = 0; i < 5; ++i) {
        spec.weights[UpsilonLabeling::a(i)] = 2;
        spec.weights[UpsilonLabeling::b(i)] = 3;
    }
    spec.weights[UpsilonLabeling::c] = 4;
    return spec;
}

auto petersen() -> Graph
{
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
        b.add_edge(i, 5 + i);
    }
    return b.build();
}

auto cycle(int n) -> Graph
{
    if (n < 3)
        throw PreconditionError("cycles need at least three vertices");
    return circulant(n, {1});
}

auto complete_bipartite(int a, int b) -> Graph
{
    GraphBuilder g(a + b);
    for (int x = 0; x < a; ++x)
        for (int y = 0; y < b; ++y)
            g.add_edge(x, a + y);
    return g.build();
}

auto empty_graph(int n) -> Graph
{
    return GraphBuilder(n).build();
}

// Named maps

namespace {

    auto build_map(const std::string &name, VegaId source, VegaId target, const std::map<std::string, std::string> &swaps)
        -> NamedMap
    {
        auto src = vega(source);
        auto dst = vega(target);
        std::vector<Vertex> perm(src.graph.order());
        for (Vertex s = 0; s < src.graph.order(); ++s) {
            auto nm = src.labels.name(s);
            auto it = swaps.find(nm);
            perm[s] = dst.labels.vertex(it == swaps.end() ? nm : it->second);
        }
        NamedMap m{name, source, target, Permutation(std::move(perm))};
        if (!is_isomorphism(src.graph, dst.graph, m.perm))
            throw std::logic_error(name + " is not an isomorphism " + to_string(source) + " -> " + to_string(target));
        return m;
    }

    auto symmetric(std::initializer_list<std::pair<std::string, std::string>> pairs) -> std::map<std::string, std::string>
    {
        std::map<std::string, std::string> m;
        for (const auto &[p, q] : pairs) {
            m[p] = q;
            m[q] = p;
        }
        return m;
    }

    auto reflection(int i, int centre_sum) -> std::map<std::string, std::string>
    {
        std::map<std::string, std::string> m;
        int n = 3 * i - 1;
        for (int j = 0; j < n; ++j)
            m[std::to_string(j)] = std::to_string(((centre_sum - j) % n + n) % n);
        return m;
    }

} // namespace

auto named_map(VegaId id, const std::string &name) -> NamedMap
{
    vega(id);
    if (name == "sigma") {
        if (id.mu != 0)
            throw UnavailableMap("sigma requires mu = 0");
        return build_map(name, id, id, symmetric({{"x", "y"}, {"a", "u"}, {"b", "v"}, {"c", "w"}}));
    }
    if (name == "tau0") {
        if (id.nu != 0)
            throw UnavailableMap("tau0 requires nu = 0");
        auto m = reflection(id.i, 2 * id.i - 1);
        for (const auto &[p, q] : symmetric({{"a", "b"}, {"u", "v"}}))
            m[p] = q;
        return build_map(name, id, id, m);
    }
    if (name == "tau1") {
        if (id.nu != 1)
            throw UnavailableMap("tau1 requires nu = 1");
        auto m = reflection(id.i, id.i - 1);
        m.erase(std::to_string(2 * id.i - 1));
        for (const auto &[p, q] : symmetric({{"b", "c"}, {"v", "w"}}))
            m[p] = q;
        return build_map(name, id, id, m);
    }
    if (name == "rho") {
        if (id.i != 2)
            throw UnavailableMap("rho requires i = 2");
        return build_map(name, id, VegaId{2, id.nu, id.mu},
                         symmetric({{"c", "2"}, {"u", "b"}, {"1", "w"}, {"x", "0"}, {"3", "y"}}));
    }
    throw UnavailableMap("unknown map " + name);
}

auto named_maps(VegaId id) -> std::vector<NamedMap>
{
    std::vector<NamedMap> out;
    for (const char *nm : {"sigma", "tau0", "tau1", "rho"}) {
        try {
            out.push_back(named_map(id, nm));
        }
        catch (const UnavailableMap &) {
        }
    }
    return out;
}

// Auxiliary paths

auto aux_paths(VegaId id) -> std::vector<AuxPath>
{
    auto [g, L] = vega(id);
    const int i = id.i;
    const int n = L.inner_count();
    std::vector<std::array<int, 4>> labelled;
    std::vector<AuxPath> out;
    for (int p0 = 0; p0 < n; ++p0) {
        if (!L.inner[p0])
            continue;
        auto colour = L.colour_of_label(p0);
        auto middle = colour == Colour::Red ? Colour::Green : Colour::Red;
        for (int p1 = 0; p1 < n; ++p1) {
            if (!L.inner[p1] || L.colour_of_label(p1) != middle || !g.adjacent(*L.inner[p0], *L.inner[p1]))
                continue;
            for (int p2 = 0; p2 < n; ++p2) {
                if (!L.inner[p2] || p2 == p0 || !g.adjacent(*L.inner[p1], *L.inner[p2]))
                    continue;
                for (int p3 = 0; p3 < n; ++p3) {
                    if (!L.inner[p3] || p3 == p0 || p3 == p1 || L.colour_of_label(p3) != colour ||
                        !g.adjacent(*L.inner[p2], *L.inner[p3]))
                        continue;
                    AuxPath path;
                    path.p = {*L.inner[p0], *L.inner[p1], *L.inner[p2], *L.inner[p3]};
                    path.colour = colour;
                    for (int j = 0; j + 1 < n; ++j) {
                        if (L.colour_of_label(j) != L.colour_of_label(j + 1))
                            continue;
                        std::array<int, 4> pi{j, (j + i) % n, (j + 2 * i) % n, j + 1};
                        std::array<int, 4> rev{pi[3], pi[2], pi[1], pi[0]};
                        std::array<int, 4> got{p0, p1, p2, p3};
                        if (got == pi || got == rev)
                            path.pi_index = j;
                    }
                    labelled.push_back({p0, p1, p2, p3});
                    out.push_back(path);
                }
            }
        }
    }
    // Sorting by labels keeps the order independent of the vertex numbering.
    std::vector<std::size_t> idx(out.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](auto x, auto y) { return labelled[x] < labelled[y]; });
    std::vector<AuxPath> sorted;
    for (auto k : idx)
        sorted.push_back(out[k]);
    return sorted;
}

auto upsilon_of_path(VegaId id, const AuxPath &path) -> Embedding
{
    auto paths = aux_paths(id);
    if (std::find(paths.begin(), paths.end(), path) == paths.end())
        throw PreconditionError("not an auxiliary path of " + to_string(id));
    auto [g, L] = vega(id);
    using U = UpsilonLabeling;
    Embedding e;
    e.map.assign(11, -1);
    e.map[U::a(1)] = L.x;
    e.map[U::a(3)] = path.p[0];
    e.map[U::a(4)] = path.p[3];
    e.map[U::b(0)] = path.p[1];
    e.map[U::b(2)] = path.p[2];
    switch (path.colour) {
    case Colour::Red:
        e.map[U::c] = L.a;
        e.map[U::a(0)] = L.w;
        e.map[U::a(2)] = L.v;
        e.map[U::b(1)] = L.u;
        e.map[U::b(3)] = L.b;
        e.map[U::b(4)] = L.c;
        break;
    case Colour::Green:
        e.map[U::c] = L.b;
        e.map[U::a(0)] = L.w;
        e.map[U::a(2)] = L.u;
        e.map[U::b(1)] = L.v;
        e.map[U::b(3)] = L.a;
        e.map[U::b(4)] = L.c;
        break;
    case Colour::Blue:
        e.map[U::c] = L.c;
        e.map[U::a(0)] = L.v;
        e.map[U::a(2)] = L.u;
        e.map[U::b(1)] = L.w;
        e.map[U::b(3)] = L.a;
        e.map[U::b(4)] = L.b;
        break;
    }
    if (!is_induced_embedding(g, mycielski_grotzsch().graph, e))
        throw std::logic_error("copy of the Mycielski-Grotzsch graph for a " + to_string(path.colour) + " path is not induced");
    return e;
}

// Extremal formula

auto extremal_k(std::int64_t n, std::int64_t s) -> std::int64_t
{
    if (n < 1 || 3 * s <= n || 2 * s > n)
        throw std::domain_error("extremal formula needs n/3 < s <= n/2 (n=" + std::to_string(n) + ", s=" + std::to_string(s) + ")");
    std::int64_t d = 3 * s - n;
    return (s + d - 1) / d;
}

auto extremal_formula(std::int64_t n, std::int64_t s) -> std::int64_t
{
    const __int128 k = extremal_k(n, s);
    const __int128 N = n, S = s;
    __int128 twice = k * (k - 1) * N * N - 2 * k * (3 * k - 4) * N * S + (3 * k - 4) * (3 * k - 1) * S * S;
    __int128 value = twice / 2;
    if (twice % 2 != 0 || value > INT64_MAX || value < INT64_MIN)
        throw std::overflow_error("extremal formula value does not fit in 64 bits");
    return static_cast<std::int64_t>(value);
}

} // namespace trifree
