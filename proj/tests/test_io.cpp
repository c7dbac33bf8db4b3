#include "kbst/io.hpp"

#include <string>

#include "doctest.h"
#include "kbst/errors.hpp"
#include "kbst/generate.hpp"
#include "kbst/svg.hpp"
#include "oracles.hpp"
#include "test_fixtures.hpp"

using namespace kbst;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("parses the tight instance") {
    const Instance inst = parse_instance_text("k 1\nT 0 0\nT 10 0\nS 5 0\n");
    CHECK(inst.terminals == fixtures::instance_a().terminals);
    CHECK(inst.steiners == fixtures::instance_a().steiners);
    CHECK(inst.budget == 1);
}

TEST_CASE("parses comments, blanks and a lone terminal") {
    const Instance inst = parse_instance_text(
        "# a comment\n\nk 0\nT 1 2  # trailing comment\n");
    CHECK(inst.terminal_count() == 1);
    CHECK(inst.steiner_count() == 0);
    CHECK(inst.terminals[0] == Point{1, 2});
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_instance_text(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("k 2\nT 0 0\nS 1 1\n") == 1);       // k > m, reported on the k line
    CHECK(line_of("k 0\nT 0 0\nT 1\n") == 3);          // malformed line
    CHECK(line_of("k 0\nT 0 zero\n") == 2);            // malformed coordinate
    CHECK(line_of("k 0\nT inf 0\n") == 2);             // non-finite coordinate
    CHECK(line_of("k 0\nT 1e999 0\n") == 2);           // overflow
    CHECK(line_of("k 0\nk 0\nT 0 0\n") == 2);          // duplicate k
    CHECK(line_of("k -1\nT 0 0\n") == 1);              // negative budget
    CHECK(line_of("q 0\n") == 1);                      // unknown tag
    CHECK(line_of("T 0 0\n") == 0);                    // missing k
    CHECK(line_of("k 0\n") == 0);                      // no terminals
}

TEST_CASE("write/parse round-trips coordinates bit-for-bit") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const Instance inst = oracles::random_instance(seed);
        const Instance again = parse_instance_text(write_instance(inst));
        CHECK(again.terminals == inst.terminals);
        CHECK(again.steiners == inst.steiners);
        CHECK(again.budget == inst.budget);
    }
    // awkward values survive too
    const Instance tricky{{{0.1, 1.0 / 3.0}, {1e-300, 12345678901234.5}}, {}, 0};
    const Instance again = parse_instance_text(write_instance(tricky));
    CHECK(again.terminals == tricky.terminals);
}

TEST_CASE("solve output lines") {
    const SolveReport report = solve_sweep(fixtures::instance_a());
    CHECK(format_solve_output(report) == "bottleneck 10\nthreshold 5\nsteiners 0\n");
}

TEST_CASE("vertex labels") {
    const Instance inst = fixtures::instance_a();
    CHECK(vertex_label(inst, 0) == "T0");
    CHECK(vertex_label(inst, 1) == "T1");
    CHECK(vertex_label(inst, 2) == "S0");
}

TEST_CASE("json report carries the tree") {
    const Instance inst = fixtures::instance_b();
    const SolveReport report = solve_sweep(inst);
    const std::string json = format_json_report(inst, report, "sweep");
    CHECK(json.find("\"method\": \"sweep\"") != std::string::npos);
    CHECK(json.find("\"bottleneck\": 2.0") != std::string::npos);
    CHECK(json.find("\"threshold\": 1.0") != std::string::npos);
    CHECK(json.find("\"budget\": 3") != std::string::npos);
}

TEST_CASE("generation is deterministic and honours the family") {
    const GenSpec spec{5, 5, 2, 7, 100.0, PointFamily::kUniform};
    CHECK(generate(spec) == generate(spec));

    const Instance inst = generate_instance(spec);
    CHECK(inst.terminal_count() == 5);
    CHECK(inst.steiner_count() == 5);
    CHECK(inst.budget == 2);
    for (VertexId v = 0; v < inst.vertex_count(); ++v) {
        CHECK(inst.point(v).x >= 0.0);
        CHECK(inst.point(v).x < 100.0);
        CHECK(inst.point(v).y >= 0.0);
        CHECK(inst.point(v).y < 100.0);
    }

    const std::string tiny = generate({1, 0, 0, 1, 100.0, PointFamily::kUniform});
    CHECK(count_occurrences(tiny, "\nT ") == 1);
    CHECK(count_occurrences(tiny, "\nS ") == 0);

    const Instance grid = generate_instance({4, 12, 3, 1, 100.0, PointFamily::kGrid});
    const double spacing = 100.0 / 4;  // ceil(sqrt(16)) cells
    for (VertexId v = 0; v < grid.vertex_count(); ++v) {
        const double qx = grid.point(v).x / spacing;
        const double qy = grid.point(v).y / spacing;
        CHECK(qx == static_cast<double>(static_cast<long long>(qx + 0.5)));
        CHECK(qy == static_cast<double>(static_cast<long long>(qy + 0.5)));
    }

    const Instance clustered = generate_instance({8, 4, 2, 9, 100.0, PointFamily::kClustered});
    CHECK(clustered.vertex_count() == 12);

    CHECK_THROWS_AS(generate({0, 0, 0, 1, 100.0, PointFamily::kUniform}),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate({2, 1, 2, 1, 100.0, PointFamily::kUniform}),
                    std::invalid_argument);
}

TEST_CASE("svg marks terminals, candidates, chosen points and the bottleneck") {
    const Instance a = fixtures::instance_a();
    const std::string svg_a = render_svg(a, solve_sweep(a).tree);
    CHECK(count_occurrences(svg_a, "class=\"terminal\"") == 2);
    CHECK(count_occurrences(svg_a, "class=\"candidate\"") == 1);
    CHECK(count_occurrences(svg_a, "class=\"chosen\"") == 0);
    CHECK(count_occurrences(svg_a, "<line") == 1);
    CHECK(count_occurrences(svg_a, "class=\"edge bottleneck\"") == 1);

    const Instance b = fixtures::instance_b();
    const std::string svg_b = render_svg(b, solve_sweep(b).tree);
    CHECK(count_occurrences(svg_b, "class=\"terminal\"") == 2);
    CHECK(count_occurrences(svg_b, "class=\"candidate\"") == 2);
    CHECK(count_occurrences(svg_b, "class=\"chosen\"") == 1);
    CHECK(count_occurrences(svg_b, "<line") == 2);

    const Instance single{{{5, 5}}, {}, 0};
    const std::string svg_single = render_svg(single, solve_sweep(single).tree);
    CHECK(count_occurrences(svg_single, "<circle") == 1);
    CHECK(count_occurrences(svg_single, "<line") == 0);

    CHECK(render_svg(a, solve_sweep(a).tree) == svg_a);  // deterministic
}
