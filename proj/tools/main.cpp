// Command-line front end for the intersection-pair library: code I/O,
// pair construction / analysis / tuning, propagation, EAQECC parameter
// derivation and catalog emission.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "lip/selfcheck.hpp"
#include "lip/serialize.hpp"

namespace {

using namespace lip;

// ---------------------------------------------------------------- output

/// Output sink honoring LIPAIRS_OUTPUT_DIR: files land in that directory
/// and a manifest records the run (command line, seed, input digests,
/// outputs). Without the variable, primary output goes to stdout.
class OutputSink {
public:
    OutputSink(std::string command, std::uint64_t seed)
        : command_(std::move(command)), seed_(seed) {
        if (const char* dir = std::getenv("LIPAIRS_OUTPUT_DIR")) dir_ = dir;
    }

    void note_input(const std::string& path) {
        inputs_.push_back({{"path", path}, {"digest", digest(path)}});
    }

    void emit(const std::string& filename, const std::string& text) {
        if (dir_.empty()) {
            std::cout << text;
            return;
        }
        std::filesystem::create_directories(dir_);
        std::string path = dir_ + "/" + filename;
        std::ofstream out(path, std::ios::binary);
        out << text;
        outputs_.push_back(filename);
    }

    ~OutputSink() {
        if (dir_.empty()) return;
        json manifest{{"command", command_},
                      {"seed", seed_},
                      {"inputs", inputs_},
                      {"outputs", outputs_},
                      {"version", "1.0.0"}};
        std::ofstream out(dir_ + "/manifest.json");
        out << manifest.dump(2) << "\n";
    }

private:
    static std::string digest(const std::string& path) {
        // FNV-1a over the raw bytes; enough to pin inputs in a manifest
        std::ifstream in(path, std::ios::binary);
        std::uint64_t h = 1469598103934665603ull;
        char c;
        while (in.get(c)) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        std::ostringstream os;
        os << std::hex << h;
        return os.str();
    }

    std::string command_, dir_;
    std::uint64_t seed_;
    json inputs_ = json::array();
    std::vector<std::string> outputs_;
};

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ",";
        out += csv_quote(cells[i]);
    }
    return out + "\r\n";
}

std::string format_rate(double r) {
    std::ostringstream os;
    os.precision(6);
    os << r;
    return os.str();
}

FieldPtr field_from_q(std::uint32_t q) {
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        std::uint32_t e = 0, m = q;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (m != 1) throw ParameterOutOfRange("q must be a prime power");
        return Field::make(p, e);
    }
    throw ParameterOutOfRange("q must be a prime power >= 2");
}

std::string distance_or_note(const LinearCode& c) {
    if (c.k() == 0) return "-";
    try {
        return std::to_string(c.min_distance());
    } catch (const TooLargeToEnumerate&) {
        return "d >= bound unavailable";
    }
}

// ---------------------------------------------------------------- commands

int cmd_code_info(OutputSink& sink, const std::string& path) {
    sink.note_input(path);
    LinearCode c = code_from_json(load_json_file(path));
    LinearCode d = c.dual();
    json j{{"n", c.n()},
           {"k", c.k()},
           {"hull_dim", c.hull_dim()},
           {"d", distance_or_note(c)},
           {"dual_d", distance_or_note(d)}};
    bool mds = false;
    try {
        mds = c.is_mds();
        j["mds"] = mds;
    } catch (const Error&) {
        j["mds"] = "unavailable";
    }
    if (!c.name.empty()) j["name"] = c.name;
    sink.emit("code_info.json", j.dump(2) + "\n");
    return 0;
}

int cmd_pair_analyze(OutputSink& sink, const std::string& p1, const std::string& p2) {
    sink.note_input(p1);
    sink.note_input(p2);
    LinearCode c1 = code_from_json(load_json_file(p1));
    LinearCode c2 = code_from_json(load_json_file(p2));
    IntersectionPair pair = IntersectionPair::make(c1, c2);
    EllBounds b = ell_bounds(c1.n(), c1.k(), c2.k());
    std::size_t r1 = ell_by_rank(c1, c2);
    std::size_t r2 = ell_by_rank(c2, c1);
    json j{{"ell", pair.ell},
           {"bounds", {{"lo", b.lo}, {"hi", b.hi}}},
           {"class", pair_class_name(classify(pair))},
           {"ell_by_rank_12", r1},
           {"ell_by_rank_21", r2},
           {"consistent", r1 == pair.ell && r2 == pair.ell}};
    sink.emit("pair_analyze.json", j.dump(2) + "\n");
    return (r1 == pair.ell && r2 == pair.ell) ? 0 : 1;
}

int cmd_pair_tune(OutputSink& sink, const std::string& p1, const std::string& p2,
                  std::size_t target, std::size_t budget, std::uint64_t seed) {
    sink.note_input(p1);
    sink.note_input(p2);
    LinearCode c1 = code_from_json(load_json_file(p1));
    LinearCode c2 = code_from_json(load_json_file(p2));
    TuneResult r = tune_by_monomial(c1, c2, target, budget, seed);
    sink.emit("pair_tune.json", pair_to_json(r.pair, &r.monomial).dump(2) + "\n");
    return 0;
}

int cmd_pair_propagate(OutputSink& sink, const std::string& rule,
                       const std::string& path, std::size_t gamma) {
    sink.note_input(path);
    IntersectionPair pair = pair_from_json(load_json_file(path));
    IntersectionPair out =
        rule == "reduce" ? reduce_ell(pair, gamma) : extend_length(pair, gamma);
    sink.emit("pair_propagate.json", pair_to_json(out).dump(2) + "\n");
    return 0;
}

int cmd_construct_grs(OutputSink& sink, std::uint32_t q, std::size_t n, std::size_t k1,
                      std::size_t k2, std::size_t ell) {
    FieldPtr field = field_from_q(q);
    IntersectionPair pair = grs_pair(field, n, k1, k2, ell);
    bool mds1 = pair.c1.k() == 0 || pair.c1.is_mds();
    bool mds2 = pair.c2.k() == 0 || pair.c2.is_mds();
    json j = pair_to_json(pair);
    j["verification"] = {{"ell_requested", ell},
                         {"ell_delivered", pair.ell},
                         {"c1_mds", mds1},
                         {"c2_mds", mds2}};
    sink.emit("pair_grs.json", j.dump(2) + "\n");
    return (pair.ell == ell && mds1 && mds2) ? 0 : 1;
}

int cmd_construct_superregular(OutputSink& sink, std::uint32_t q, std::size_t n,
                               std::size_t i, std::size_t j, std::size_t ell,
                               const std::string& kind) {
    FieldPtr field = field_from_q(q);
    std::vector<Elem> x(n), y(n);
    for (std::size_t t = 0; t < n; ++t) {
        x[t] = static_cast<Elem>(t);
        y[t] = static_cast<Elem>(n + t);
    }
    Matrix a = kind == "cauchy" ? cauchy(field, x, y)
                                : vandermonde_superregular(field, x, y);
    IntersectionPair pair = pair_from_superregular(a, i, j, ell);
    json out = pair_to_json(pair);
    out["matrix"] = matrix_to_json(a);
    out["verification"] = {{"ell_requested", ell}, {"ell_delivered", pair.ell}};
    sink.emit("pair_superregular.json", out.dump(2) + "\n");
    return pair.ell == ell ? 0 : 1;
}

int cmd_probe(OutputSink& sink, std::uint32_t q, std::size_t n, std::size_t k1,
              std::size_t k2, std::uint64_t seed, std::size_t budget) {
    FieldPtr field = field_from_q(q);
    ProbeResult r = conjecture_probe(field, n, k1, k2, seed, budget);
    json j = json::object();
    for (const auto& [ell, witness] : r.witnesses) {
        if (witness)
            j[std::to_string(ell)] = pair_to_json(*witness);
        else
            j[std::to_string(ell)] = "no witness found";
    }
    sink.emit("probe.json", j.dump(2) + "\n");
    return 0;
}

int cmd_eaqecc_derive(OutputSink& sink, const std::string& path) {
    sink.note_input(path);
    IntersectionPair pair = pair_from_json(load_json_file(path));
    EaqeccParams p = eaqecc_from_pair(pair);
    sink.emit("eaqecc.json", eaqecc_to_json(p).dump(2) + "\n");
    return p.valid() ? 0 : 1;
}

int cmd_mds_grid(OutputSink& sink, std::uint32_t q, std::size_t nmax) {
    FieldPtr field = field_from_q(q);
    std::string csv = csv_row(
        {"q", "n", "k", "ell", "kk", "d", "c", "rate", "net_rate", "slack"});
    bool all_ok = true;
    for (std::size_t n = 2; n <= nmax && n <= field->q() + 1; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            for (std::size_t ell = 0; ell <= std::min(k, n - k); ++ell) {
                std::optional<MdsEaqecc> m;
                try {
                    m.emplace(mds_eaqecc(field, n, k, ell));
                } catch (const DegreeConditionViolated&) {
                    continue; // no root-free linear factor exists here
                }
                const EaqeccParams& p = m->params;
                all_ok = all_ok && p.singleton_slack() == 0;
                csv += csv_row({std::to_string(q), std::to_string(n),
                                std::to_string(k), std::to_string(ell),
                                std::to_string(p.k),
                                p.d ? std::to_string(*p.d) : "-",
                                std::to_string(p.c), format_rate(p.rate()),
                                format_rate(p.net_rate()),
                                std::to_string(p.singleton_slack())});
            }
        }
    }
    sink.emit("mds_grid.csv", csv);
    return all_ok ? 0 : 1;
}

int cmd_catalog(OutputSink& sink, std::uint32_t q, std::size_t n_lo, std::size_t n_hi,
                std::size_t r, const std::string& codes_path) {
    FieldPtr field = field_from_q(q);
    CodeCatalog catalog = CodeCatalog::builtins(field, n_hi);
    if (!codes_path.empty()) {
        sink.note_input(codes_path);
        for (const auto& j : load_json_file(codes_path))
            catalog.add(code_from_json(j));
    }
    auto entries = catalog_search(field, n_lo, n_hi, r, catalog);
    std::string csv = csv_row(
        {"n", "k1", "k2", "ell", "kk", "d", "c", "rate", "net_rate", "half_rate"});
    for (const CatalogEntry& e : entries) {
        const EaqeccParams& p = e.params;
        csv += csv_row({std::to_string(e.n), std::to_string(e.k1),
                        std::to_string(e.k2), std::to_string(e.ell),
                        std::to_string(p.k), p.d ? std::to_string(*p.d) : "-",
                        std::to_string(p.c), format_rate(p.rate()),
                        format_rate(p.net_rate()), e.half_rate ? "yes" : "no"});
    }
    sink.emit("catalog.csv", csv);
    return 0;
}

int cmd_reproduce_example(OutputSink& sink) {
    ExampleReport r = reproduce_example();
    std::string text;
    const char* labels[] = {"base pair", "with A1", "with A2", "with A3"};
    for (std::size_t i = 0; i < r.computed_ells.size(); ++i)
        text += std::string(labels[i]) + ": ell = " +
                std::to_string(r.computed_ells[i]) + "\n";
    text += r.ok ? "all values match\n" : "MISMATCH against expected 3, 2, 1, 0\n";
    sink.emit("example.txt", text);
    return r.ok ? 0 : 1;
}

int cmd_selfcheck(OutputSink& sink, const std::string& profile) {
    auto results = selfcheck(profile == "full" ? SelfcheckProfile::Full
                                               : SelfcheckProfile::Quick);
    json j = json::array();
    bool ok = true;
    for (const SuiteResult& s : results) {
        j.push_back({{"suite", s.name}, {"passed", s.passed}, {"detail", s.detail}});
        ok = ok && s.passed;
    }
    sink.emit("selfcheck.json", j.dump(2) + "\n");
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear ell-intersection pairs of codes and EAQECC parameters"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized searches")->capture_default_str();

    std::string in1, in2, rule, kind = "vandermonde", profile = "quick", codes_path;
    std::uint32_t q = 2;
    std::size_t n = 0, k1 = 0, k2 = 0, ell = 0, sel_i = 0, sel_j = 0, gamma = 0,
                target = 0, budget = 10000, nmax = 0, n_lo = 1, n_hi = 0, rr = 1;

    auto* code = app.add_subcommand("code", "linear code utilities");
    auto* code_info = code->add_subcommand("info", "print n, k, d, dual d, hull, MDS");
    code_info->add_option("file", in1, "code JSON file")->required();

    auto* pair = app.add_subcommand("pair", "intersection-pair operations");
    auto* analyze = pair->add_subcommand("analyze", "ell, bounds, classification");
    analyze->add_option("c1", in1)->required();
    analyze->add_option("c2", in2)->required();
    auto* tune = pair->add_subcommand("tune", "search for a monomial matrix");
    tune->add_option("c1", in1)->required();
    tune->add_option("c2", in2)->required();
    tune->add_option("--target", target, "desired ell")->required();
    tune->add_option("--budget", budget)->capture_default_str();
    auto* propagate = pair->add_subcommand("propagate", "shrink or lengthen a pair");
    propagate->add_option("rule", rule)->required()->check(CLI::IsMember({"reduce", "extend"}));
    propagate->add_option("pair", in1, "pair JSON file")->required();
    propagate->add_option("--gamma", gamma, "target ell")->required();
    auto* cgrs = pair->add_subcommand("construct-grs", "MDS pair from GRS codes");
    cgrs->add_option("--q", q)->required();
    cgrs->add_option("--n", n)->required();
    cgrs->add_option("--k1", k1)->required();
    cgrs->add_option("--k2", k2)->required();
    cgrs->add_option("--ell", ell)->required();
    auto* csr = pair->add_subcommand("construct-superregular",
                                     "MDS pair from a super-regular matrix");
    csr->add_option("--q", q)->required();
    csr->add_option("--n", n)->required();
    csr->add_option("--i", sel_i, "rows of C")->required();
    csr->add_option("--j", sel_j, "extra rows of D")->required();
    csr->add_option("--ell", ell)->required();
    csr->add_option("--kind", kind)->check(CLI::IsMember({"cauchy", "vandermonde"}));
    auto* probe = pair->add_subcommand("probe-conjecture",
                                       "witness search across the ell range");
    probe->add_option("--q", q)->required();
    probe->add_option("--n", n)->required();
    probe->add_option("--k1", k1)->required();
    probe->add_option("--k2", k2)->required();
    probe->add_option("--budget", budget)->capture_default_str();

    auto* eaqecc = app.add_subcommand("eaqecc", "quantum code parameters");
    auto* derive = eaqecc->add_subcommand("derive", "parameters from a pair");
    derive->add_option("pair", in1, "pair JSON file")->required();
    auto* grid = eaqecc->add_subcommand("mds-grid", "MDS parameter table (CSV)");
    grid->add_option("--q", q)->required();
    grid->add_option("--nmax", nmax)->required();
    auto* catalog = eaqecc->add_subcommand("catalog", "positive-net-rate search (CSV)");
    catalog->add_option("--q", q)->required();
    catalog->add_option("--n-lo", n_lo)->capture_default_str();
    catalog->add_option("--n-hi", n_hi)->required();
    catalog->add_option("--r", rr)->capture_default_str();
    catalog->add_option("--codes", codes_path, "extra catalog JSON");

    auto* example = app.add_subcommand("reproduce-example",
                                       "the [7,4]/[7,3] binary pair and its monomials");
    auto* check = app.add_subcommand("selfcheck", "module invariant suites");
    check->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));

    CLI11_PARSE(app, argc, argv);

    std::string cmdline;
    for (int i = 0; i < argc; ++i) cmdline += std::string(i ? " " : "") + argv[i];
    OutputSink sink(cmdline, seed);

    try {
        if (*code_info) return cmd_code_info(sink, in1);
        if (*analyze) return cmd_pair_analyze(sink, in1, in2);
        if (*tune) return cmd_pair_tune(sink, in1, in2, target, budget, seed);
        if (*propagate) return cmd_pair_propagate(sink, rule, in1, gamma);
        if (*cgrs) return cmd_construct_grs(sink, q, n, k1, k2, ell);
        if (*csr) return cmd_construct_superregular(sink, q, n, sel_i, sel_j, ell, kind);
        if (*probe) return cmd_probe(sink, q, n, k1, k2, seed, budget);
        if (*derive) return cmd_eaqecc_derive(sink, in1);
        if (*grid) return cmd_mds_grid(sink, q, nmax);
        if (*catalog) return cmd_catalog(sink, q, n_lo, n_hi, rr, codes_path);
        if (*example) return cmd_reproduce_example(sink);
        if (*check) return cmd_selfcheck(sink, profile);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
