#include "kbst/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "kbst/errors.hpp"

#include "json.hpp"

namespace kbst {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string tok;
    while (stream >> tok) tokens.push_back(tok);
    return tokens;
}

double parse_coordinate(const std::string& token, int line_no) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(line_no, "non-finite coordinate '" + token + "'");
    }
    if (ec != std::errc() || ptr != end) {
        throw ParseError(line_no, "malformed coordinate '" + token + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(line_no, "non-finite coordinate '" + token + "'");
    }
    return value;
}

int parse_budget(const std::string& token, int line_no) {
    int value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(line_no, "malformed budget '" + token + "'");
    }
    if (value < 0) throw ParseError(line_no, "budget must be non-negative");
    return value;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    Instance inst;
    bool seen_k = false;
    int k_line = 0;
    int line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "k") {
            if (tokens.size() != 2) throw ParseError(line_no, "expected 'k <int>'");
            if (seen_k) throw ParseError(line_no, "duplicate k line");
            inst.budget = parse_budget(tokens[1], line_no);
            seen_k = true;
            k_line = line_no;
        } else if (tokens[0] == "T" || tokens[0] == "S") {
            if (tokens.size() != 3) {
                throw ParseError(line_no, "expected '" + tokens[0] + " <x> <y>'");
            }
            const Point p{parse_coordinate(tokens[1], line_no),
                          parse_coordinate(tokens[2], line_no)};
            (tokens[0] == "T" ? inst.terminals : inst.steiners).push_back(p);
        } else {
            throw ParseError(line_no, "unrecognized line '" + tokens[0] + " ...'");
        }
    }
    if (!seen_k) throw ParseError(0, "missing k line");
    if (inst.terminals.empty()) throw ParseError(0, "no terminals (need at least one T line)");
    if (inst.budget > inst.steiner_count()) {
        throw ParseError(k_line, "k exceeds the number of S lines");
    }
    return inst;
}

Instance parse_instance_text(std::string_view text) {
    std::istringstream stream{std::string(text)};
    return parse_instance(stream);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_instance(in);
}

std::string format_double(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

std::string write_instance(const Instance& inst) {
    std::string out = "k " + std::to_string(inst.budget) + "\n";
    for (const Point& p : inst.terminals) {
        out += "T " + format_double(p.x) + " " + format_double(p.y) + "\n";
    }
    for (const Point& p : inst.steiners) {
        out += "S " + format_double(p.x) + " " + format_double(p.y) + "\n";
    }
    return out;
}

std::string vertex_label(const Instance& inst, VertexId v) {
    return inst.is_terminal(v) ? "T" + std::to_string(v)
                               : "S" + std::to_string(v - inst.terminal_count());
}

std::string format_solve_output(const SolveReport& report) {
    return "bottleneck " + format_double(report.tree.bottleneck) + "\n" +
           "threshold " + format_double(report.tree.threshold_used) + "\n" +
           "steiners " + std::to_string(report.tree.chosen_steiners.size()) + "\n";
}

std::string format_json_report(const Instance& inst, const SolveReport& report,
                               const std::string& method) {
    nlohmann::ordered_json doc;
    doc["method"] = method;
    doc["terminals"] = inst.terminal_count();
    doc["steiner_candidates"] = inst.steiner_count();
    doc["budget"] = inst.budget;
    doc["bottleneck"] = report.tree.bottleneck;
    doc["threshold"] = report.tree.threshold_used;
    doc["threshold_index"] = report.threshold_index;
    doc["probes"] = report.probes;
    doc["elapsed_seconds"] = report.elapsed_seconds;
    doc["chosen_steiners"] = report.tree.chosen_steiners;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const WeightedEdge& e : report.tree.edges) {
        edges.push_back({{"u", e.u}, {"v", e.v}, {"length", e.length}});
    }
    doc["edges"] = edges;
    return doc.dump(2) + "\n";
}

}  // namespace kbst
