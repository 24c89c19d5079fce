#include "labelkit/edge_list.hpp"
#include "labelkit/error.hpp"
#include "labelkit/graph.hpp"

#include <doctest.h>

using namespace labelkit;

namespace {

ParseErrorKind parse_failure(const char* text, int expected_line)
{
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        CHECK(e.line() == expected_line);
        return e.kind();
    }
    FAIL("document was accepted: " << text);
    return ParseErrorKind::Malformed;
}

} // namespace

TEST_CASE("parse_graph reads documents")
{
    const Graph p3 = parse_graph("n 3\ne 0 1\ne 1 2\n");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));

    const Graph one = parse_graph("n 1");
    CHECK(one.vertex_count() == 1);
    CHECK(one.edge_count() == 0);

    const Graph commented = parse_graph("# a path\n\nn 3\r\n# middle\ne 1 2\ne 0 1\n");
    CHECK(commented == p3);
}

TEST_CASE("parse errors are distinct and carry the line")
{
    CHECK(parse_failure("n 3\ne 0 3\n", 2) == ParseErrorKind::EndpointOutOfRange);
    CHECK(parse_failure("n 3\ne 1 1\n", 2) == ParseErrorKind::Loop);
    CHECK(parse_failure("n 3\ne 0 1\n# x\ne 0 1\n", 4) == ParseErrorKind::DuplicateEdge);
    CHECK(parse_failure("n 3\nedge 0 1\n", 2) == ParseErrorKind::Malformed);
    CHECK(parse_failure("n 3\ne 0\n", 2) == ParseErrorKind::Malformed);
    CHECK(parse_failure("n 3\ne 2 1\n", 2) == ParseErrorKind::Malformed);
    CHECK(parse_failure("e 0 1\n", 1) == ParseErrorKind::MissingHeader);
    CHECK(parse_failure("# only comments\n", 1) == ParseErrorKind::MissingHeader);
    CHECK(parse_failure("n -1\n", 1) == ParseErrorKind::Malformed);
    CHECK(parse_failure("n 2\nn 2\n", 2) == ParseErrorKind::Malformed);
}

TEST_CASE("serialize is canonical and round-trips")
{
    const Graph g = parse_graph("n 4\ne 2 3\ne 0 2\ne 0 1\n");
    const std::string doc = serialize(g);
    CHECK(doc == "n 4\ne 0 1\ne 0 2\ne 2 3\n");
    CHECK(parse_graph(doc) == g);
    CHECK(serialize(graphs::empty(2)) == "n 2\n");
}

TEST_CASE("induced_subgraph")
{
    CHECK(induced_subgraph(graphs::complete(4), VertexSet({0, 1, 2})) == graphs::complete(3));
    CHECK(induced_subgraph(graphs::cycle(5), VertexSet()).vertex_count() == 0);

    const Graph h = induced_subgraph(graphs::cycle(5), VertexSet({0, 1, 3}));
    CHECK(h.vertex_count() == 3);
    CHECK(h.edge_count() == 1);
    CHECK(h.adjacent(0, 1));

    CHECK_THROWS_AS(VertexSet({2, 1}), DomainError);
    CHECK_THROWS_AS(VertexSet({1, 1}), DomainError);
    CHECK_THROWS_AS(induced_subgraph(graphs::path(3), VertexSet({0, 3})), DomainError);
    CHECK(induced_edge_count(graphs::complete(5), VertexSet({0, 2, 4})) == 3);
}

TEST_CASE("graph invariants and builders")
{
    CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 0}}), DomainError);
    CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 5}}), DomainError);
    CHECK_THROWS_AS(Graph(Graph::max_vertices + 1), DomainError);

    GraphBuilder b(3);
    CHECK(b.add_edge(0, 1));
    CHECK_FALSE(b.add_edge(1, 0));
    const Graph g = std::move(b).build();
    CHECK(g.edge_count() == 1);

    const Graph pet = graphs::petersen();
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(pet.min_degree() == 3);
    CHECK(pet.max_degree() == 3);
    CHECK(pet.connected());
    CHECK_FALSE(parse_graph("n 4\ne 0 1\ne 2 3\n").connected());
    CHECK(graphs::star(5).max_degree() == 5);
    CHECK(graphs::complete(6).edge_count() == 15);
}

TEST_CASE("relabel and masks")
{
    const Graph p = graphs::path(4);
    const std::vector<int> perm{3, 2, 1, 0};
    CHECK(relabel(p, perm) == p);
    const std::vector<int> perm2{1, 0, 2, 3};
    const Graph q = relabel(p, perm2);
    CHECK(q.adjacent(0, 1));
    CHECK(q.adjacent(0, 2));
    CHECK_FALSE(q.adjacent(1, 2));
    CHECK(p.neighbor_mask(1) == 0b101);
}
