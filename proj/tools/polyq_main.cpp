#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyq/bending.hpp"
#include "polyq/kaehler.hpp"
#include "polyq/notation.hpp"
#include "polyq/polygon.hpp"
#include "polyq/tree.hpp"
#include "polyq/verify.hpp"

namespace {

using nlohmann::json;

std::vector<int> parse_lengths(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("--lengths wants comma-separated integers, got '" +
                                        tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("--lengths is empty");
    return out;
}

polyq::LengthVector to_boundary(const std::vector<int>& lengths) {
    return {lengths[0], std::vector<int>(lengths.begin() + 1, lengths.end())};
}

json json_count(const polyq::Count& v) {
    static const polyq::Count maxll = std::numeric_limits<long long>::max();
    if (v <= maxll) return static_cast<long long>(v);
    return v.str();  // past 2^63, emit as a string rather than lose digits
}

json labeling_to_json(const polyq::Labeling& phi) {
    json j = json::object();
    for (const auto& [e, v] : phi) j[polyq::edge_path_string(e)] = v;
    return j;
}

polyq::Labeling labeling_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("labeling file must be a JSON object");
    polyq::Labeling phi;
    for (const auto& [key, val] : j.items()) {
        if (!val.is_number_integer())
            throw std::invalid_argument("labeling value for edge '" + key +
                                        "' is not an integer");
        phi[polyq::parse_edge_path(key)] = val.get<int>();
    }
    return phi;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counts of quantum states for polygon moduli, two polarizations"};
    app.require_subcommand(1);
    int rc = 0;

    std::string lengths_arg, tree_arg, labeling_file, scope = "agreement";
    int leaves = 4, limit = 0, max_leaves = 6, max_label = 4, max_n = 10;
    bool serial = false, json_table = false;

    auto* ck = app.add_subcommand("count-kahler",
                                  "dimension of the space of holomorphic sections");
    ck->add_option("--lengths", lengths_arg, "side lengths d,c1,c2,... (root first)")
        ->required();
    ck->callback([&] {
        auto r = parse_lengths(lengths_arg);
        auto res = polyq::dim_h0(r);
        emit(json{{"dim_H0", json_count(res.dim)},
                  {"smooth", res.smooth},
                  {"nonempty", polyq::moduli_nonempty(to_boundary(r))}});
    });

    auto* cb = app.add_subcommand("count-bending", "number of admissible integer labelings");
    cb->add_option("--tree", tree_arg, "tree in (*,(*,*)) notation")->required();
    cb->add_option("--lengths", lengths_arg, "boundary values d,c1,c2,...")->required();
    cb->callback([&] {
        auto t = polyq::parse_tree(tree_arg);
        auto lv = to_boundary(parse_lengths(lengths_arg));
        if (static_cast<int>(lv.c.size()) != t.leaf_count())
            throw std::invalid_argument("tree has " + std::to_string(t.leaf_count()) +
                                        " leaves but --lengths carries " +
                                        std::to_string(lv.c.size()) + " leaf values");
        polyq::Count n = polyq::labeling_count_element(t).eval(lv.d, lv.c);
        emit(json{{"count", json_count(n)},
                  {"internal_edges", polyq::internal_edges(t).size()}});
    });

    auto* et = app.add_subcommand("enumerate-trees", "all trivalent trees, one per line");
    et->add_option("--leaves", leaves, "number of leaves")->required();
    et->callback([&] {
        for (const auto& t : polyq::enumerate_trivalent(leaves))
            std::cout << polyq::canonical_form(t) << "\n";
    });

    auto* lb = app.add_subcommand("labelings", "enumerate admissible labelings");
    lb->add_option("--tree", tree_arg, "tree in (*,(*,*)) notation")->required();
    lb->add_option("--lengths", lengths_arg, "boundary values d,c1,c2,...")->required();
    lb->add_option("--limit", limit, "emit at most this many (0 = all)");
    lb->callback([&] {
        auto t = polyq::parse_tree(tree_arg);
        auto lv = to_boundary(parse_lengths(lengths_arg));
        auto all = polyq::enumerate_labelings(t, lv);
        json out = json::array();
        for (const auto& phi : all) {
            if (limit > 0 && static_cast<int>(out.size()) >= limit) break;
            out.push_back(labeling_to_json(phi));
        }
        emit(out);
    });

    auto* rz = app.add_subcommand("realize", "closed polygon realizing a labeling");
    rz->add_option("--tree", tree_arg, "tree in (*,(*,*)) notation")->required();
    rz->add_option("--lengths", lengths_arg, "boundary values d,c1,c2,...")->required();
    rz->add_option("--labeling", labeling_file, "JSON file mapping edge path to value")
        ->required();
    rz->callback([&] {
        auto t = polyq::parse_tree(tree_arg);
        auto lv = to_boundary(parse_lengths(lengths_arg));
        std::ifstream in(labeling_file);
        if (!in) throw std::invalid_argument("cannot open " + labeling_file);
        json jphi = json::parse(in);
        auto phi = labeling_from_json(jphi);
        auto u = polyq::realize(t, lv, phi);
        json vecs = json::array();
        for (const auto& v : u.vectors) vecs.push_back({v[0], v[1], v[2]});
        json bend = json::object();
        for (const auto& e : polyq::all_edges(t))
            bend[polyq::edge_path_string(e)] =
                polyq::bending_value(u, polyq::index_partition(t, e));
        emit(json{{"vectors", vecs},
                  {"bending", bend},
                  {"closure_residual", u.closure_residual()}});
    });

    auto* vf = app.add_subcommand("verify", "check both counts agree on a sweep");
    vf->add_option("--max-leaves", max_leaves, "largest tree size (default 6)");
    vf->add_option("--max-label", max_label, "largest boundary value (default 4)");
    vf->add_option("--max-n", max_n, "recurrence depth for --scope recurrence/all");
    vf->add_option("--scope", scope, "agreement | laws | recurrence | all")
        ->check(CLI::IsMember({"agreement", "laws", "recurrence", "all"}));
    vf->add_flag("--serial", serial, "run the serial reference implementation");
    vf->callback([&] {
        const auto mode = serial ? polyq::ExecMode::Serial : polyq::ExecMode::Parallel;
        std::vector<polyq::VerificationReport> reports;
        if (scope == "agreement" || scope == "all")
            reports.push_back(polyq::check_agreement(max_leaves, max_label, mode));
        if (scope == "laws" || scope == "all")
            reports.push_back(polyq::check_operad_laws(std::min(max_label, 3)));
        if (scope == "recurrence" || scope == "all")
            reports.push_back(polyq::check_recurrence(max_n));
        polyq::VerificationReport merged;
        if (reports.size() == 1) {
            merged = std::move(reports.front());
        } else {
            merged.scope = "all";
            merged.max_leaves = max_leaves;
            merged.max_label = max_label;
            for (auto& r : reports) {
                merged.tree_classes += r.tree_classes;
                merged.checks_run += r.checks_run;
                merged.wall_seconds += r.wall_seconds;
                merged.failures.insert(merged.failures.end(), r.failures.begin(),
                                       r.failures.end());
            }
            std::sort(merged.failures.begin(), merged.failures.end());
        }
        emit(merged.to_json());
        if (!merged.pass()) rc = 1;
    });

    auto* rcur = app.add_subcommand("recurrence", "caterpillar count table");
    rcur->add_option("--max-n", max_n, "last row (default 10)");
    rcur->add_flag("--json", json_table, "emit JSON instead of CSV");
    rcur->callback([&] {
        if (max_n < 3) throw std::invalid_argument("--max-n must be >= 3");
        const int imax = max_n + 2;
        // recompute both ways; a mismatch is a verification failure
        std::vector<std::vector<polyq::Count>> rows;
        for (int n = 3; n <= max_n; ++n) {
            std::vector<polyq::Count> row;
            for (int i = 0; i <= imax; ++i) {
                polyq::Count r = polyq::caterpillar_count_recurrence(n, i);
                if (r != polyq::caterpillar_count_direct(n, i)) {
                    std::cerr << "recurrence and direct count disagree at n=" << n
                              << " i=" << i << "\n";
                    rc = 1;
                    return;
                }
                row.push_back(std::move(r));
            }
            rows.push_back(std::move(row));
        }
        if (json_table) {
            json out = json::array();
            for (int n = 3; n <= max_n; ++n) {
                json vals = json::array();
                for (const auto& v : rows[n - 3]) vals.push_back(json_count(v));
                out.push_back(json{{"n", n}, {"counts", vals}});
            }
            emit(out);
        } else {
            std::cout << "n";
            for (int i = 0; i <= imax; ++i) std::cout << ",i=" << i;
            std::cout << "\n";
            for (int n = 3; n <= max_n; ++n) {
                std::cout << n;
                for (const auto& v : rows[n - 3]) std::cout << "," << v.str();
                std::cout << "\n";
            }
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help lands here with code 0
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
