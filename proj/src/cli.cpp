#include "labelkit/cli.hpp"

#include "labelkit/census.hpp"
#include "labelkit/chernoff.hpp"
#include "labelkit/degeneracy.hpp"
#include "labelkit/edge_list.hpp"
#include "labelkit/enumerate.hpp"
#include "labelkit/error.hpp"
#include "labelkit/experiments.hpp"
#include "labelkit/goodness.hpp"
#include "labelkit/growth.hpp"
#include "labelkit/isomorphism.hpp"
#include "labelkit/labeling.hpp"
#include "labelkit/ledger.hpp"
#include "labelkit/proof_constants.hpp"
#include "labelkit/random_graphs.hpp"
#include "labelkit/trees.hpp"
#include "labelkit/universal.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <memory>
#include <sstream>

namespace labelkit::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Thrown for usage problems detected after CLI11 parsing (exit code 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
    unsigned threads = 0;
};

void emit(Context& ctx, const Json& j)
{
    ctx.out << j.dump(2) << '\n';
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw DomainError("cannot write " + path);
    f << text;
    if (!f)
        throw DomainError("failed writing " + path);
}

std::string dec(std::uint64_t v)
{
    return std::to_string(v);
}

Json edges_json(const Graph& g)
{
    Json a = Json::array();
    for (const Edge& e : g.edges())
        a.push_back({e.u, e.v});
    return a;
}

Json graph_json(const Graph& g)
{
    return Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges_json(g)}};
}

Json vertices_json(const VertexSet& s)
{
    return Json(s.ids());
}

SearchLimits limits_for(int max_vertices)
{
    SearchLimits l;
    l.max_vertices = max_vertices;
    return l;
}

/// Optional explicit certificate; all three values or none.
struct CertOptions {
    std::optional<double> delta;
    std::optional<double> C;
    std::optional<double> s;

    void add(CLI::App* app)
    {
        app->add_option("--delta", delta, "certificate delta in (0,1)");
        app->add_option("--C", C, "certificate C >= 1");
        app->add_option("--s", s, "certificate s >= 2");
    }

    bool given() const { return delta || C || s; }

    DecencyCertificate resolve(const GrowthFunction* f) const
    {
        if (given()) {
            if (!(delta && C && s))
                throw UsageError("--delta, --C and --s must be given together");
            DecencyCertificate c{*delta, *C, *s};
            c.validate();
            return c;
        }
        if (!f)
            throw UsageError("give --f or an explicit certificate (--delta --C --s)");
        return certify_builtin(*f);
    }
};

Json cert_json(const DecencyCertificate& c)
{
    return Json{{"delta", c.delta}, {"C", c.C}, {"s", c.s}};
}

// ---------------------------------------------------------------- graph

void add_graph(CLI::App& app, Context& ctx)
{
    auto* graph = app.add_subcommand("graph", "graph primitives")->require_subcommand(1);

    {
        auto* sub = graph->add_subcommand("info", "vertex/edge counts, degrees, degeneracy");
        auto path = std::make_shared<std::string>();
        sub->add_option("graph", *path, "Edge-List v1 file")->required();
        sub->callback([&ctx, path] {
            const Graph g = read_graph_file(*path);
            const PeelOrdering p = degeneracy_ordering(g);
            Json j{{"n", g.vertex_count()},
                   {"m", g.edge_count()},
                   {"min_degree", g.min_degree()},
                   {"max_degree", g.max_degree()},
                   {"connected", g.connected()},
                   {"degeneracy", p.k},
                   {"peel_order", p.order}};
            emit(ctx, j);
        });
    }
    {
        auto* sub = graph->add_subcommand("canon", "canonical form");
        auto path = std::make_shared<std::string>();
        auto maxv = std::make_shared<int>(10);
        sub->add_option("graph", *path)->required();
        sub->add_option("--max-vertices", *maxv, "size guard")->check(CLI::Range(0, SearchLimits::ceiling));
        sub->callback([&ctx, path, maxv] {
            const Graph g = parse_graph(serialize(read_graph_file(*path)));
            const CanonicalForm c = canonical_form(g, limits_for(*maxv));
            emit(ctx, Json{{"canonical", c.text()}, {"position", c.position}});
        });
    }
    {
        auto* sub = graph->add_subcommand("iso", "isomorphism test with certificate");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        sub->add_option("first", *a)->required();
        sub->add_option("second", *b)->required();
        sub->callback([&ctx, a, b] {
            const Graph g = read_graph_file(*a);
            const Graph h = read_graph_file(*b);
            const auto cert = are_isomorphic(g, h);
            Json j{{"isomorphic", cert.has_value()}};
            j["permutation"] = cert ? Json(cert->permutation) : Json(nullptr);
            emit(ctx, j);
        });
    }
    {
        auto* sub = graph->add_subcommand("aut", "automorphism count and labelled copies");
        auto path = std::make_shared<std::string>();
        auto maxv = std::make_shared<int>(10);
        sub->add_option("graph", *path)->required();
        sub->add_option("--max-vertices", *maxv, "size guard")->check(CLI::Range(0, SearchLimits::ceiling));
        sub->callback([&ctx, path, maxv] {
            const Graph g = read_graph_file(*path);
            const auto lim = limits_for(*maxv);
            emit(ctx, Json{{"n", g.vertex_count()},
                           {"aut", dec(automorphism_count(g, lim))},
                           {"labeled_count", to_decimal(labeled_count(g, lim))}});
        });
    }
    {
        auto* sub = graph->add_subcommand("count", "#Emb(F->G) and #Sub(F->G) for equal-order graphs");
        auto f = std::make_shared<std::string>();
        auto g = std::make_shared<std::string>();
        auto maxv = std::make_shared<int>(10);
        sub->add_option("pattern", *f)->required();
        sub->add_option("host", *g)->required();
        sub->add_option("--max-vertices", *maxv, "size guard")->check(CLI::Range(0, SearchLimits::ceiling));
        sub->callback([&ctx, f, g, maxv] {
            const Graph pf = read_graph_file(*f);
            const Graph hg = read_graph_file(*g);
            const auto lim = limits_for(*maxv);
            emit(ctx, Json{{"embeddings", dec(count_embeddings(pf, hg, lim))},
                           {"copies", dec(count_subgraph_copies(pf, hg, lim))},
                           {"aut_pattern", dec(automorphism_count(pf, lim))}});
        });
    }
    {
        auto* sub = graph->add_subcommand("induced", "induced subgraph on a vertex set");
        auto path = std::make_shared<std::string>();
        auto ids = std::make_shared<std::vector<int>>();
        sub->add_option("graph", *path)->required();
        sub->add_option("--vertices", *ids, "ascending vertex ids")->delimiter(',');
        sub->callback([&ctx, path, ids] {
            const Graph g = read_graph_file(*path);
            const VertexSet s(*ids);
            s.validate_for(g);
            const Graph h = induced_subgraph(g, s);
            Json j = graph_json(h);
            j["document"] = serialize(h);
            emit(ctx, j);
        });
    }
    {
        auto* sub = graph->add_subcommand("enumerate", "one representative per isomorphism class");
        auto n = std::make_shared<int>(0);
        auto cache = std::make_shared<std::string>();
        auto list = std::make_shared<bool>(false);
        sub->add_option("--n", *n, "vertex count (<= 7)")->required()->check(CLI::Range(0, 7));
        sub->add_option("--cache", *cache, "cache directory");
        sub->add_flag("--graphs", *list, "include canonical documents");
        sub->callback([&ctx, n, cache, list] {
            EnumerationOptions o;
            if (!cache->empty())
                o.cache_dir = *cache;
            const auto graphs = enumerate_unlabeled(*n, o);
            BigInt labeled = 0;
            Json docs = Json::array();
            for (const Graph& g : graphs) {
                labeled += labeled_count(g);
                if (*list)
                    docs.push_back(serialize(g));
            }
            Json j{{"n", *n}, {"unlabeled", graphs.size()}, {"labeled", to_decimal(labeled)}};
            if (*list)
                j["graphs"] = docs;
            emit(ctx, j);
        });
    }
}

// ---------------------------------------------------------------- label / universal

Json encoded_json(const EncodedGraph& enc)
{
    Json labels = Json::array();
    for (const Label& l : enc.labels)
        labels.push_back(l.to_hex());
    return Json{{"n", enc.params.n}, {"k", enc.params.k}, {"w", enc.params.w}, {"bits", enc.params.label_bits()},
                {"labels", labels}};
}

void add_label(CLI::App& app, Context& ctx)
{
    auto* label = app.add_subcommand("label", "degeneracy adjacency labels")->require_subcommand(1);
    {
        auto* sub = label->add_subcommand("encode", "labels of every vertex");
        auto path = std::make_shared<std::string>();
        auto n = std::make_shared<std::optional<int>>();
        auto k = std::make_shared<std::optional<int>>();
        sub->add_option("graph", *path)->required();
        sub->add_option("--n", *n, "encode into a scheme for n vertices");
        sub->add_option("--k", *k, "encode into a scheme with degeneracy bound k");
        sub->callback([&ctx, path, n, k] {
            const Graph g = read_graph_file(*path);
            if (n->has_value() != k->has_value())
                throw UsageError("--n and --k must be given together");
            const EncodedGraph enc = *n ? encode(g, SchemeParams::make(**n, **k)) : encode(g);
            emit(ctx, encoded_json(enc));
        });
    }
    {
        auto* sub = label->add_subcommand("decode", "adjacency from two labels");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        sub->add_option("first", *a, "hex label")->required();
        sub->add_option("second", *b, "hex label")->required();
        sub->add_option("--n", *n)->required();
        sub->add_option("--k", *k)->required();
        sub->callback([&ctx, a, b, n, k] {
            const SchemeParams p = SchemeParams::make(*n, *k);
            const Label la = Label::from_hex(*a, p.label_bits());
            const Label lb = Label::from_hex(*b, p.label_bits());
            emit(ctx, Json{{"adjacent", decode(la, lb, p)}});
        });
    }
    {
        auto* sub = label->add_subcommand("roundtrip", "encode, then decode every pair against the graph");
        auto path = std::make_shared<std::string>();
        sub->add_option("graph", *path)->required();
        sub->callback([&ctx, path] {
            const Graph g = read_graph_file(*path);
            const EncodedGraph enc = encode(g);
            const int n = g.vertex_count();
            std::size_t mismatches = 0;
            std::size_t pairs = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u; v < n; ++v, ++pairs) {
                    const bool adj = u != v && g.adjacent(u, v);
                    if (decode(enc.labels[static_cast<std::size_t>(u)], enc.labels[static_cast<std::size_t>(v)],
                               enc.params)
                        != adj)
                        ++mismatches;
                }
            emit(ctx, Json{{"status", mismatches == 0 ? "ok" : "mismatch"},
                           {"n", n},
                           {"k", enc.params.k},
                           {"bits", enc.params.label_bits()},
                           {"pairs_checked", pairs},
                           {"mismatches", mismatches}});
            if (mismatches != 0)
                throw Error("label round-trip failed on " + std::to_string(mismatches) + " pairs");
        });
    }
    {
        auto* sub = label->add_subcommand("bound", "degeneracy and label size for an f-sparse monotone class");
        auto C = std::make_shared<double>(1.0);
        auto f = std::make_shared<std::string>("log");
        auto n = std::make_shared<int>(0);
        sub->add_option("--C", *C, "constant C > 0");
        sub->add_option("--f", *f, "growth function spec");
        sub->add_option("--n", *n)->required();
        sub->callback([&ctx, C, f, n] {
            const auto b = monotone_class_bound(*C, parse_growth_spec(*f), *n);
            emit(ctx, Json{{"degeneracy_bound", b.degeneracy_bound}, {"label_bits", b.label_bits}});
        });
    }

    auto* universal = app.add_subcommand("universal", "induced universal graph of the label scheme")->require_subcommand(1);
    {
        auto* sub = universal->add_subcommand("build", "all well-formed labels with decode adjacency");
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto list = std::make_shared<bool>(false);
        sub->add_option("--n", *n)->required();
        sub->add_option("--k", *k)->required();
        sub->add_flag("--labels", *list, "include labels and edges");
        sub->callback([&ctx, n, k, list] {
            const UniversalGraph u = build_universal_graph(SchemeParams::make(*n, *k));
            Json j{{"n", *n},
                   {"k", *k},
                   {"w", u.params.w},
                   {"label_bits", u.params.label_bits()},
                   {"candidate_strings", dec(std::uint64_t{1} << u.params.label_bits())},
                   {"vertices", u.graph.vertex_count()},
                   {"edges", u.graph.edge_count()}};
            if (*list) {
                Json labels = Json::array();
                for (const Label& l : u.labels)
                    labels.push_back(l.to_bit_string());
                j["labels"] = labels;
                j["edge_list"] = edges_json(u.graph);
            }
            emit(ctx, j);
        });
    }
    {
        auto* sub = universal->add_subcommand("check", "embed a graph into the universal graph via its labels");
        auto path = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        sub->add_option("graph", *path)->required();
        sub->add_option("--n", *n)->required();
        sub->add_option("--k", *k)->required();
        sub->callback([&ctx, path, n, k] {
            const Graph g = read_graph_file(*path);
            const UniversalGraph u = build_universal_graph(SchemeParams::make(*n, *k));
            const auto map = embed_into_universal(g, u);
            const bool ok = is_induced_embedding(g, u.graph, map);
            emit(ctx, Json{{"status", ok ? "ok" : "invalid"}, {"map", map}, {"universal_vertices", u.graph.vertex_count()}});
            if (!ok)
                throw Error("embedding is not induced");
        });
    }
}

// ---------------------------------------------------------------- goodness

Json goodness_json(const GoodnessReport& r, const Graph& g, const std::string& f, double c, const char* mode)
{
    Json records = Json::array();
    for (const auto& rec : r.records)
        records.push_back(Json{{"k", rec.k},
                               {"max_edges", rec.max_edges},
                               {"upper_bound", rec.upper_bound},
                               {"threshold", rec.threshold},
                               {"exhaustive", rec.exhaustive},
                               {"method", to_string(rec.method)}});
    Json j{{"verdict", to_string(r.verdict)}, {"n", g.vertex_count()}, {"f", f}, {"c", c}, {"mode", mode},
           {"records", records}};
    if (r.witness)
        j["witness"] = Json{{"vertices", vertices_json(r.witness->vertices)},
                            {"edges", r.witness->edges},
                            {"threshold", r.witness->threshold}};
    else
        j["witness"] = nullptr;
    return j;
}

void add_good(CLI::App& app, Context& ctx)
{
    auto* good = app.add_subcommand("good", "f-goodness of a graph")->require_subcommand(1);
    {
        auto* sub = good->add_subcommand("check", "check every subgraph size against the f-good thresholds");
        auto path = std::make_shared<std::string>();
        auto f = std::make_shared<std::string>("log");
        auto c = std::make_shared<double>(1.0);
        auto exact = std::make_shared<bool>(false);
        auto refute = std::make_shared<bool>(false);
        auto oracle = std::make_shared<bool>(false);
        auto budget = std::make_shared<std::uint64_t>(200'000'000);
        sub->add_option("graph", *path)->required();
        sub->add_option("--f", *f, "growth function spec");
        sub->add_option("--c", *c, "scale c > 0");
        auto* ex = sub->add_flag("--exact", *exact, "exact maximum for every k (default)");
        auto* re = sub->add_flag("--refute", *refute, "skip provably safe k, stop at the first violation");
        auto* orc = sub->add_flag("--oracle", *oracle, "all-subsets oracle (n <= 12)");
        ex->excludes(re)->excludes(orc);
        re->excludes(orc);
        sub->add_option("--budget", *budget, "branch-and-bound node budget per k");
        sub->callback([&ctx, path, f, c, refute, oracle, budget] {
            const Graph g = read_graph_file(*path);
            const GrowthFunction fn = parse_growth_spec(*f);
            if (*oracle) {
                emit(ctx, goodness_json(naive_goodness_oracle(g, fn, *c), g, fn.spec(), *c, "oracle"));
                return;
            }
            GoodnessOptions o;
            o.mode = *refute ? GoodnessMode::Refute : GoodnessMode::Exact;
            o.node_budget = *budget;
            emit(ctx, goodness_json(is_f_good(g, fn, *c, o), g, fn.spec(), *c, *refute ? "refute" : "exact"));
        });
    }
    {
        auto* sub = good->add_subcommand("densest", "maximum edge count over k-vertex subsets");
        auto path = std::make_shared<std::string>();
        auto k = std::make_shared<int>(2);
        auto above = std::make_shared<std::optional<double>>();
        auto budget = std::make_shared<std::uint64_t>(200'000'000);
        sub->add_option("graph", *path)->required();
        sub->add_option("--k", *k)->required();
        sub->add_option("--above", *above, "stop at the first subset with more edges than this");
        sub->add_option("--budget", *budget, "node budget");
        sub->callback([&ctx, path, k, above, budget] {
            const Graph g = read_graph_file(*path);
            DensestOptions o;
            o.early_exit_above = *above;
            o.node_budget = *budget;
            const DensestResult r = max_edges_k_subgraph(g, *k, o);
            static constexpr const char* names[] = {"exact", "early-exit", "within-limit", "inconclusive"};
            emit(ctx, Json{{"k", *k},
                           {"edges", r.edges},
                           {"witness", vertices_json(r.witness)},
                           {"status", names[static_cast<int>(r.status)]},
                           {"exhaustive", r.exhaustive()},
                           {"nodes", r.nodes}});
        });
    }
    {
        auto* sub = good->add_subcommand("threshold", "edge threshold for k-vertex subgraphs");
        auto f = std::make_shared<std::string>("log");
        auto c = std::make_shared<double>(1.0);
        auto n = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        sub->add_option("--f", *f);
        sub->add_option("--c", *c);
        sub->add_option("--n", *n)->required();
        sub->add_option("--k", *k)->required();
        sub->callback([&ctx, f, c, n, k] {
            const double t = threshold(*k, *n, parse_growth_spec(*f), *c);
            emit(ctx, Json{{"threshold", t}, {"regime", static_cast<long long>(*k) * *k <= *n ? "small" : "large"}});
        });
    }
}

// ---------------------------------------------------------------- decent

std::optional<DecencyCounterexample> falsify_with(bool parity, const GrowthFunction* f, const DecencyCertificate& cert,
                                                  const std::vector<double>& grid, double max_product)
{
    FalsifierOptions o;
    o.max_product = max_product;
    if (parity)
        return falsify_decency(RealFunction(parity_function), cert, grid, o);
    return falsify_decency(*f, cert, grid, o);
}

void add_decent(CLI::App& app, Context& ctx)
{
    auto* decent = app.add_subcommand("decent", "decent growth functions")->require_subcommand(1);
    {
        auto* sub = decent->add_subcommand("certify", "(delta, C, s) certificate of a built-in");
        auto f = std::make_shared<std::string>();
        sub->add_option("--f", *f)->required();
        sub->callback([&ctx, f] {
            const GrowthFunction fn = parse_growth_spec(*f);
            Json j{{"f", fn.spec()}};
            j["certificate"] = cert_json(certify_builtin(fn));
            emit(ctx, j);
        });
    }
    {
        auto* sub = decent->add_subcommand("eval", "value of a growth function");
        auto f = std::make_shared<std::string>();
        auto x = std::make_shared<double>(2.0);
        sub->add_option("--f", *f)->required();
        sub->add_option("--x", *x)->required();
        sub->callback([&ctx, f, x] { emit(ctx, Json{{"x", *x}, {"value", eval(parse_growth_spec(*f), *x)}}); });
    }
    {
        auto* sub = decent->add_subcommand("falsify", "search a grid for a violation of a certificate");
        auto f = std::make_shared<std::string>();
        auto parity = std::make_shared<bool>(false);
        auto cert = std::make_shared<CertOptions>();
        auto lo = std::make_shared<std::optional<double>>();
        auto hi = std::make_shared<double>(1e6);
        auto points = std::make_shared<std::size_t>(400);
        auto integral = std::make_shared<bool>(false);
        auto max_product = std::make_shared<double>(1e6);
        auto* fo = sub->add_option("--f", *f, "growth function spec");
        auto* po = sub->add_flag("--parity", *parity, "the odd/even log/sqrt function");
        fo->excludes(po);
        cert->add(sub);
        sub->add_option("--grid-min", *lo, "default: s");
        sub->add_option("--grid-max", *hi);
        sub->add_option("--points", *points)->check(CLI::PositiveNumber);
        sub->add_flag("--integral", *integral, "round grid points to integers");
        sub->add_option("--max-product", *max_product, "largest x*y tested for sub-multiplicativity");
        sub->callback([&ctx, f, parity, cert, lo, hi, points, integral, max_product] {
            if (f->empty() && !*parity)
                throw UsageError("give --f or --parity");
            std::optional<GrowthFunction> fn;
            if (!f->empty())
                fn = parse_growth_spec(*f);
            if (*parity && !cert->given())
                throw UsageError("--parity needs an explicit certificate (--delta --C --s)");
            const DecencyCertificate c = cert->resolve(fn ? &*fn : nullptr);
            const auto grid = geometric_grid(lo->value_or(c.s), *hi, *points, *integral || *parity);
            const auto cx = falsify_with(*parity, fn ? &*fn : nullptr, c, grid, *max_product);
            Json j{{"f", *parity ? std::string("parity") : fn->spec()}, {"certificate", cert_json(c)},
                   {"grid_points", grid.size()}};
            if (cx)
                j["counterexample"] = Json{{"kind", to_string(cx->kind)}, {"x", cx->x}, {"y", cx->y},
                                           {"lhs", cx->lhs},           {"rhs", cx->rhs}, {"pair_index", cx->pair_index}};
            else
                j["counterexample"] = nullptr;
            emit(ctx, j);
        });
    }
    {
        auto* sub = decent->add_subcommand("constants", "c1, c2 and c for a certificate and gamma");
        auto f = std::make_shared<std::string>();
        auto cert = std::make_shared<CertOptions>();
        auto gamma = std::make_shared<double>(2.0);
        sub->add_option("--f", *f);
        cert->add(sub);
        sub->add_option("--gamma", *gamma, "gamma > 1");
        sub->callback([&ctx, f, cert, gamma] {
            std::optional<GrowthFunction> fn;
            if (!f->empty())
                fn = parse_growth_spec(*f);
            const DecencyCertificate c = cert->resolve(fn ? &*fn : nullptr);
            const ProofConstants pc = constant_c(c, *gamma);
            emit(ctx, Json{{"certificate", cert_json(c)}, {"gamma", *gamma}, {"c1", pc.c1}, {"c2", pc.c2}, {"c", pc.c}});
        });
    }
    {
        auto* sub = decent->add_subcommand("ratios", "both sides of the density-ratio bounds at (n, k)");
        auto f = std::make_shared<std::string>("log");
        auto cert = std::make_shared<CertOptions>();
        auto gamma = std::make_shared<double>(2.0);
        auto n = std::make_shared<long long>(0);
        auto k = std::make_shared<long long>(0);
        sub->add_option("--f", *f);
        cert->add(sub);
        sub->add_option("--gamma", *gamma);
        sub->add_option("--n", *n)->required();
        sub->add_option("--k", *k)->required();
        sub->callback([&ctx, f, cert, gamma, n, k] {
            const GrowthFunction fn = parse_growth_spec(*f);
            const DecencyCertificate c = cert->resolve(&fn);
            const RatioReport r = ratio_inequalities(fn, c, *gamma, *n, *k);
            emit(ctx, Json{{"regime", to_string(r.regime)},
                           {"in_regime", r.in_regime},
                           {"side_condition", r.side_condition},
                           {"ratio", r.ratio},
                           {"ratio_bound", r.ratio_bound},
                           {"ratio_holds", r.ratio_holds},
                           {"one_plus_a", r.one_plus_a},
                           {"one_plus_a_bound", r.one_plus_a_bound},
                           {"one_plus_a_holds", r.one_plus_a_holds}});
        });
    }
}

// ---------------------------------------------------------------- sample / experiment

void add_sample(CLI::App& app, Context& ctx)
{
    auto* sample = app.add_subcommand("sample", "seeded random graphs")->require_subcommand(1);
    for (const bool gnp : {true, false}) {
        auto* sub = sample->add_subcommand(gnp ? "gnp" : "gnm", gnp ? "G(n, p)" : "G(n, m)");
        auto n = std::make_shared<int>(0);
        auto p = std::make_shared<double>(0.5);
        auto m = std::make_shared<std::uint64_t>(0);
        auto seed = std::make_shared<std::uint64_t>(42);
        auto trial = std::make_shared<std::uint64_t>(0);
        auto out = std::make_shared<std::string>();
        sub->add_option("--n", *n)->required()->check(CLI::Range(0, Graph::max_vertices));
        if (gnp)
            sub->add_option("--p", *p)->required();
        else
            sub->add_option("--m", *m)->required();
        sub->add_option("--seed", *seed);
        sub->add_option("--trial", *trial, "sub-stream index");
        sub->add_option("--out", *out, "write the Edge-List document here");
        sub->callback([&ctx, gnp, n, p, m, seed, trial, out] {
            RngStream rng = RngStream(*seed).derive(*trial);
            const Graph g = gnp ? sample_gnp(*n, *p, rng) : sample_gnm(*n, *m, rng);
            Json j{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"seed", *seed}, {"trial", *trial}};
            if (out->empty())
                j["document"] = serialize(g);
            else
                write_file(*out, serialize(g));
            emit(ctx, j);
        });
    }
}

void add_experiment(CLI::App& app, Context& ctx)
{
    auto* exp = app.add_subcommand("experiment", "Monte Carlo and tail-bound experiments")->require_subcommand(1);
    {
        auto* sub = exp->add_subcommand("goodness", "rate of non-(cf)-good random graphs");
        auto f = std::make_shared<std::string>("log");
        auto gamma = std::make_shared<double>(2.0);
        auto c = std::make_shared<std::string>("auto");
        auto ns = std::make_shared<std::vector<int>>();
        auto trials = std::make_shared<int>(200);
        auto seed = std::make_shared<std::uint64_t>(42);
        auto mode = std::make_shared<std::string>("gnp");
        auto budget = std::make_shared<std::uint64_t>(50'000'000);
        auto csv = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        sub->add_option("--f", *f);
        sub->add_option("--gamma", *gamma);
        sub->add_option("--c", *c, "'auto' or a positive number");
        sub->add_option("--n", *ns, "comma-separated sizes")->required()->delimiter(',');
        sub->add_option("--trials", *trials)->check(CLI::PositiveNumber);
        sub->add_option("--seed", *seed);
        sub->add_option("--mode", *mode)->check(CLI::IsMember({"gnp", "gnm"}));
        sub->add_option("--budget", *budget, "branch-and-bound node budget per k");
        sub->add_flag("--csv", *csv, "CSV instead of JSON");
        sub->add_option("--out", *out, "write the table here (CSV when --csv or *.csv)");
        sub->callback([&ctx, f, gamma, c, ns, trials, seed, mode, budget, csv, out] {
            ExperimentConfig cfg;
            cfg.f = parse_growth_spec(*f);
            cfg.gamma = *gamma;
            if (*c != "auto") {
                try {
                    std::size_t used = 0;
                    cfg.c = std::stod(*c, &used);
                    if (used != c->size())
                        throw std::invalid_argument("c");
                } catch (const std::exception&) {
                    throw UsageError("--c must be 'auto' or a number");
                }
            }
            cfg.n_values = *ns;
            cfg.trials = *trials;
            cfg.seed = *seed;
            cfg.mode = *mode == "gnm" ? SampleMode::Gnm : SampleMode::Gnp;
            cfg.goodness_budget = *budget;
            cfg.threads = ctx.threads;
            const ExperimentReport r = run_goodness_experiment(cfg);
            const bool as_csv = *csv || (out->size() >= 4 && out->compare(out->size() - 4, 4, ".csv") == 0);
            std::string text;
            if (as_csv) {
                text = r.to_csv();
            } else {
                Json rows = Json::array();
                for (const auto& row : r.rows) {
                    Json jr{{"n", row.n},
                            {"trials", row.trials},
                            {"violations", row.violations},
                            {"good", row.good},
                            {"inconclusive", row.inconclusive},
                            {"rate", row.rate},
                            {"n_pow_minus_2", row.n_pow_minus_2},
                            {"c_used", row.c_used},
                            {"p_used", row.p_used}};
                    jr["infeasible"] = row.infeasible ? Json(*row.infeasible) : Json(nullptr);
                    rows.push_back(jr);
                }
                text = Json{{"f", cfg.f.spec()}, {"gamma", cfg.gamma}, {"mode", *mode}, {"seed", cfg.seed}, {"rows", rows}}
                           .dump(2)
                    + "\n";
            }
            if (out->empty())
                ctx.out << text;
            else
                write_file(*out, text);
        });
    }
    {
        auto* sub = exp->add_subcommand("transfer", "property frequency under G(n,m) versus G(n,p)");
        auto property = std::make_shared<std::string>("triangle");
        auto n = std::make_shared<int>(20);
        auto p = std::make_shared<double>(0.1);
        auto trials = std::make_shared<int>(10000);
        auto seed = std::make_shared<std::uint64_t>(42);
        auto f = std::make_shared<std::string>();
        auto c = std::make_shared<std::optional<double>>();
        sub->add_option("--property", *property, "triangle | connected | true | false | good");
        sub->add_option("--n", *n)->check(CLI::Range(0, 4096));
        sub->add_option("--p", *p);
        sub->add_option("--trials", *trials)->check(CLI::PositiveNumber);
        sub->add_option("--seed", *seed);
        sub->add_option("--f", *f, "growth function for --property good");
        sub->add_option("--c", *c, "scale for --property good");
        sub->callback([&ctx, property, n, p, trials, seed, f, c] {
            std::optional<GrowthFunction> fn;
            if (!f->empty())
                fn = parse_growth_spec(*f);
            const GraphProperty prop = named_property(*property, fn, *c);
            TransferConfig cfg{*n, *p, *trials, *seed, ctx.threads};
            const TransferReport r = run_transfer_experiment(prop, cfg);
            emit(ctx, Json{{"property", r.property},
                           {"n", r.n},
                           {"p", r.p},
                           {"m", r.m},
                           {"trials", r.trials},
                           {"freq_gnm", r.freq_gnm},
                           {"freq_gnp", r.freq_gnp},
                           {"ci_gnm", {r.ci_gnm.lo, r.ci_gnm.hi}},
                           {"ci_gnp", {r.ci_gnp.lo, r.ci_gnp.hi}},
                           {"scale", r.scale},
                           {"holds_empirically", r.holds_empirically},
                           {"violation", r.violation}});
        });
    }
    {
        auto* sub = exp->add_subcommand("chernoff", "binomial tail bounds against the exact tail");
        auto N = std::make_shared<long long>(100);
        auto p = std::make_shared<double>(0.1);
        auto t = std::make_shared<double>(20.0);
        sub->add_option("--N", *N)->required();
        sub->add_option("--p", *p)->required();
        sub->add_option("--t", *t)->required();
        sub->callback([&ctx, N, p, t] {
            const ChernoffBounds b = chernoff_tail(*N, *p, *t);
            emit(ctx, Json{{"mu", b.mu},
                           {"one_plus_a", b.one_plus_a},
                           {"bound_tight", b.tight},
                           {"bound_loose", b.loose},
                           {"exact_tail", binomial_upper_tail(*N, *p, *t)}});
        });
    }
}

// ---------------------------------------------------------------- census / ledger / tree

void add_census(CLI::App& app, Context& ctx)
{
    auto* sub = app.add_subcommand("census", "monotone closure of seed graphs");
    auto seeds = std::make_shared<std::vector<std::string>>();
    auto max_n = std::make_shared<int>(8);
    auto list = std::make_shared<bool>(false);
    sub->add_option("--seeds", *seeds, "seed graph files")->required();
    sub->add_option("--max-n", *max_n)->check(CLI::Range(1, 8));
    sub->add_flag("--graphs", *list, "include representatives");
    sub->callback([&ctx, seeds, max_n, list] {
        std::vector<Graph> gs;
        for (const auto& path : *seeds)
            gs.push_back(read_graph_file(path));
        const CensusTable t = mon_closure_census(gs, *max_n, *list);
        const auto small = smallness_probe(t);
        Json rows = Json::array();
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            const auto& r = t.rows[i];
            Json jr{{"n", r.n}, {"unlabeled", r.unlabeled}, {"labeled", to_decimal(r.labeled)}, {"c_n", small[i].c}};
            if (*list) {
                Json docs = Json::array();
                for (const Graph& g : r.representatives)
                    docs.push_back(serialize(g));
                jr["graphs"] = docs;
            }
            rows.push_back(jr);
        }
        emit(ctx, Json{{"max_n", *max_n}, {"rows", rows}});
    });
}

void add_ledger(CLI::App& app, Context& ctx)
{
    auto* sub = app.add_subcommand("ledger", "log-space comparison of the two counting bounds");
    auto f = std::make_shared<std::string>("log");
    auto gamma = std::make_shared<std::string>("auto");
    auto grid = std::make_shared<std::string>("2^10..2^24");
    auto cert = std::make_shared<CertOptions>();
    sub->add_option("--f", *f);
    sub->add_option("--gamma", *gamma, "'auto' (4/delta) or a number > 1");
    sub->add_option("--n-grid", *grid, "2^a..2^b or a comma list");
    cert->add(sub);
    sub->callback([&ctx, f, gamma, grid, cert] {
        LedgerInput in;
        in.f = parse_growth_spec(*f);
        if (cert->given())
            in.certificate = cert->resolve(nullptr);
        if (*gamma != "auto") {
            try {
                std::size_t used = 0;
                in.gamma = std::stod(*gamma, &used);
                if (used != gamma->size())
                    throw std::invalid_argument("gamma");
            } catch (const std::exception&) {
                throw UsageError("--gamma must be 'auto' or a number");
            }
        }
        in.n_grid = parse_n_grid(*grid);
        const LedgerReport r = counting_ledger(in);
        Json pts = Json::array();
        for (const auto& p : r.points)
            pts.push_back(Json{{"n", p.n},
                               {"log2_u", p.log2_u},
                               {"log2_k", p.log2_k},
                               {"log2_E1", p.log2_e1},
                               {"log2_E2", p.log2_e2},
                               {"ratio", p.ratio},
                               {"verdict", p.dominant ? "dominant" : "not yet dominant"}});
        Json j{{"f", in.f.spec()}, {"delta", r.delta}, {"gamma", r.gamma}, {"note", "leading-order terms only; o(1) dropped"},
               {"points", pts}};
        j["crossover"] = r.crossover ? Json(*r.crossover) : Json(nullptr);
        emit(ctx, j);
    });
}

Json tree_json(const Graph& t)
{
    return Json{{"n", t.vertex_count()}, {"m", t.edge_count()}, {"max_degree", t.max_degree()}, {"edges", edges_json(t)}};
}

void add_tree(CLI::App& app, Context& ctx)
{
    auto* tree = app.add_subcommand("tree", "bounded-degree trees and spanning families")->require_subcommand(1);
    {
        auto* sub = tree->add_subcommand("max", "inclusion-maximal tree of maximum degree <= d");
        auto path = std::make_shared<std::string>();
        auto d = std::make_shared<int>(1);
        sub->add_option("graph", *path)->required();
        sub->add_option("--d", *d)->required();
        sub->callback([&ctx, path, d] {
            const Graph g = read_graph_file(*path);
            const SubTree t = bounded_degree_max_tree(g, *d);
            Json edges = Json::array();
            for (const Edge& e : t.edges)
                edges.push_back({e.u, e.v});
            emit(ctx, Json{{"vertices", t.vertices}, {"edges", edges}, {"maximal", is_maximal_bounded_tree(g, t, *d)}});
        });
    }
    {
        auto* sub = tree->add_subcommand("dense-core", "induced subgraph spanned by a maximal degree-d tree");
        auto path = std::make_shared<std::string>();
        auto d = std::make_shared<int>(1);
        sub->add_option("graph", *path)->required();
        sub->add_option("--d", *d)->required();
        sub->callback([&ctx, path, d] {
            const Graph g = read_graph_file(*path);
            const DenseCore core = dense_core(g, *d);
            emit(ctx, Json{{"original_ids", core.original},
                           {"h", graph_json(core.h)},
                           {"h_min_degree", core.h.min_degree()},
                           {"tree", tree_json(core.tree)},
                           {"tree_spans_h", is_spanning_tree(core.tree, core.h)}});
        });
    }
    {
        auto* sub = tree->add_subcommand("family", "spanning subgraphs containing a spanning tree");
        auto path = std::make_shared<std::string>();
        auto tpath = std::make_shared<std::string>();
        auto maxv = std::make_shared<int>(10);
        sub->add_option("graph", *path)->required();
        sub->add_option("--tree", *tpath, "spanning tree file (default: maximal tree with d = max degree)");
        sub->add_option("--max-vertices", *maxv, "size guard")->check(CLI::Range(0, SearchLimits::ceiling));
        sub->callback([&ctx, path, tpath, maxv] {
            const Graph g = read_graph_file(*path);
            Graph t;
            if (!tpath->empty()) {
                t = read_graph_file(*tpath);
            } else {
                if (g.vertex_count() == 0)
                    throw DomainError("tree family: empty graph");
                const SubTree st = bounded_degree_max_tree(g, std::max(1, g.max_degree()));
                t = Graph::from_edges(g.vertex_count(), st.edges);
            }
            const FamilyStats s = spanning_family(g, t, 20, limits_for(*maxv));
            emit(ctx, Json{{"tree", tree_json(t)},
                           {"size", dec(s.size)},
                           {"expected_size", dec(s.expected_size)},
                           {"iso_classes", s.iso_classes},
                           {"max_aut", dec(s.max_aut)},
                           {"aut_tree", dec(s.aut_tree)},
                           {"emb_tree_host", dec(s.emb_tree_host)},
                           {"chain_failures", s.chain_failures}});
        });
    }
}

} // namespace

const std::vector<SubcommandInfo>& registry()
{
    static const std::vector<SubcommandInfo> entries{
        {"graph info", {"parse_graph", "degeneracy_ordering"}},
        {"graph canon", {"parse_graph", "canonical_form"}},
        {"graph iso", {"are_isomorphic"}},
        {"graph aut", {"automorphism_count", "labeled_count"}},
        {"graph count", {"count_embeddings", "count_subgraph_copies"}},
        {"graph induced", {"induced_subgraph"}},
        {"graph enumerate", {"enumerate_unlabeled", "labeled_count"}},
        {"label encode", {"encode", "degeneracy_ordering"}},
        {"label decode", {"decode"}},
        {"label roundtrip", {"encode", "decode"}},
        {"label bound", {"monotone_class_bound", "eval"}},
        {"universal build", {"build_universal_graph"}},
        {"universal check", {"build_universal_graph", "embed_into_universal"}},
        {"good check", {"is_f_good", "naive_goodness_oracle", "threshold", "max_edges_k_subgraph", "degeneracy"}},
        {"good densest", {"max_edges_k_subgraph"}},
        {"good threshold", {"threshold"}},
        {"decent certify", {"certify_builtin"}},
        {"decent eval", {"eval"}},
        {"decent falsify", {"falsify_decency", "certify_builtin"}},
        {"decent constants", {"constant_c"}},
        {"decent ratios", {"ratio_inequalities"}},
        {"sample gnp", {"sample_gnp"}},
        {"sample gnm", {"sample_gnm"}},
        {"experiment goodness", {"run_goodness_experiment", "constant_c", "sample_gnp", "sample_gnm", "is_f_good"}},
        {"experiment transfer", {"run_transfer_experiment"}},
        {"experiment chernoff", {"chernoff_tail"}},
        {"census", {"mon_closure_census", "smallness_probe"}},
        {"ledger", {"counting_ledger"}},
        {"tree max", {"bounded_degree_max_tree"}},
        {"tree dense-core", {"dense_core"}},
        {"tree family", {"spanning_family"}},
    };
    return entries;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Context ctx{out, err};
    CLI::App app{"labelkit: adjacency labels, goodness and growth-function experiments", "labelkit"};
    app.require_subcommand(1);
    app.add_option("--threads", ctx.threads, "worker threads (0 = all cores)");
    add_graph(app, ctx);
    add_label(app, ctx);
    add_good(app, ctx);
    add_decent(app, ctx);
    add_sample(app, ctx);
    add_experiment(app, ctx);
    add_census(app, ctx);
    add_ledger(app, ctx);
    add_tree(app, ctx);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const HexFormatError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace labelkit::cli
