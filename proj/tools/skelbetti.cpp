// Command-line surface for the Betti-table engine: ingest facet/basis/table
// files, compute graded Betti tables, run the closed-form skeleton transfer,
// matroid operations, and the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "skelbetti/betti.hpp"
#include "skelbetti/io.hpp"
#include "skelbetti/matroid.hpp"
#include "skelbetti/random_gen.hpp"
#include "skelbetti/transfer.hpp"

namespace {

using namespace skelbetti;

void print_table(const BettiTable& t, const std::string& format) {
    if (format == "json")
        std::cout << t.render_json() << '\n';
    else if (format == "csv")
        std::cout << t.render_csv();
    else
        std::cout << t.render_text();
}

int run_info(const std::string& facets_path, const std::string& bases_path) {
    if (!facets_path.empty()) {
        SimplicialComplex c = complex_from_file(facets_path);
        std::cout << "n=" << c.ground_set_size() << " d=" << c.dimension()
                  << " f=" << c.f_vector().to_string() << (c.is_pure() ? " pure" : " not pure")
                  << '\n';
        return 0;
    }
    Matroid m = matroid_from_file(bases_path);
    std::cout << "n=" << m.ground_set_size() << " r=" << m.rank()
              << " bases=" << m.bases().size() << " circuits=" << m.circuits().size() << '\n';
    SimplicialComplex c = m.independence_complex();
    std::cout << "independence complex: d=" << c.dimension() << " f=" << c.f_vector().to_string()
              << (c.is_pure() ? " pure" : " not pure") << '\n';
    return 0;
}

int run_betti(const std::string& facets_path, const std::string& bases_path, int field,
              const std::string& convention, const std::string& format) {
    BettiTable t = facets_path.empty() ? matroid_betti(matroid_from_file(bases_path), field)
                                       : hochster_table(complex_from_file(facets_path), field);
    print_table(t.to_convention(convention_from_string(convention)), format);
    return 0;
}

int run_transfer(const std::string& complex_path, const std::string& table_path, int field,
                 int steps, int dim_flag, bool verify, const std::string& format) {
    BettiTable table;
    int n = 0, d = 0;
    std::optional<SimplicialComplex> complex;
    if (!complex_path.empty()) {
        complex = complex_from_file(complex_path);
        table = hochster_table(*complex, field);
        n = complex->ground_set_size();
        d = complex->dimension();
    } else {
        table = BettiTable::parse_json(read_text_file(table_path)).to_convention(Convention::ring);
        n = table.n;
        d = (dim_flag >= 0) ? dim_flag : infer_dimension(table);
    }

    if (steps == 0) {
        print_table(table, format);
        return 0;
    }
    std::vector<BettiTable> chain = transfer_chain(TransferInput{table, n, d}, steps);
    for (int s = 0; s < static_cast<int>(chain.size()); ++s) {
        if (format == "table")
            std::cout << "-- skeleton of dimension " << (d - 1 - s) << " --\n";
        print_table(chain[static_cast<std::size_t>(s)], format);
    }

    if (!verify) return 0;
    if (!complex) {
        std::cerr << "error: --verify needs --complex input\n";
        return 2;
    }
    int failures = 0;
    for (int s = 0; s < static_cast<int>(chain.size()); ++s) {
        BettiTable direct = hochster_table(complex->skeleton(d - 1 - s), field);
        if (chain[static_cast<std::size_t>(s)].entries == direct.entries) {
            std::cout << "verify step " << (s + 1) << ": MATCH\n";
        } else {
            ++failures;
            std::cout << "verify step " << (s + 1) << ": MISMATCH\n";
        }
    }
    return failures == 0 ? 0 : 1;
}

int run_matroid_transform(const std::string& path, const std::string& op, int index,
                          bool strict) {
    Matroid m = matroid_from_file(path, strict);
    Matroid out = m;
    if (op == "truncate") {
        if (index == m.rank())
            std::cerr << "note: truncating by the full rank yields the rank-0 matroid\n";
        out = m.truncation(index);
    } else if (op == "elongate") {
        out = m.elongation(index);
    } else {
        out = m.dual();
    }
    std::cout << render_set_file(out.ground_set_size(), out.bases());
    return 0;
}

int run_matroid_betti(const std::string& path, int field, const std::string& convention,
                      const std::string& format, bool strict) {
    BettiTable t = matroid_betti(matroid_from_file(path, strict), field);
    print_table(t.to_convention(convention_from_string(convention)), format);
    return 0;
}

int run_shift_check(const std::string& path, bool strict) {
    Matroid m = matroid_from_file(path, strict);
    int corank = m.ground_set_size() - m.rank();
    if (corank == 0) {
        std::cout << "no elongations to compare (corank 0); trivially PASS\n";
        return 0;
    }
    int failures = 0;
    for (int l = 0; l < corank; ++l) {
        bool ok = elongation_shift_check(m, l);
        std::cout << "l=" << l << ": " << (ok ? "PASS" : "FAIL")
                  << " support shift between elongations " << l << " and " << (l + 1) << '\n';
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

int run_counterexample() {
    CounterexampleReport rep = counterexample_report();
    std::cout << "shared Betti table of the two ideals:\n"
              << rep.table_m.render_text() << "first elongation of M:\n"
              << rep.elongation_m.render_text() << "first elongation of N:\n"
              << rep.elongation_n.render_text() << rep.to_string();
    return rep.ok() ? 0 : 1;
}

struct CheckStats {
    int failures = 0;
    int warnings = 0;
};

void check_one(const SimplicialComplex& complex, int field, bool verbose, CheckStats& stats) {
    BettiTable table = hochster_table(complex, field);
    int n = complex.ground_set_size();
    int d = complex.dimension();
    auto report = [&](const std::string& name, bool pass, const std::string& detail = "") {
        if (!pass) ++stats.failures;
        if (verbose || !pass)
            std::cout << (pass ? "PASS " : "FAIL ") << name
                      << (detail.empty() ? "" : ": " + detail) << '\n';
    };

    HilbertReport hilbert = hilbert_identity_check(complex, table);
    report("hilbert-identity", hilbert.holds, hilbert.mismatch);

    VanishingReport vanishing = vanishing_check(table, d);
    report("degree-bound", vanishing.holds, vanishing.holds ? "" : vanishing.summary());
    for (const auto& [i, j, v] : vanishing.at_bound) {
        ++stats.warnings;
        if (verbose)
            std::cout << "WARN degree-bound: entry (" << i << "," << j << ")=" << v
                      << " sits at the extreme degree j=d+i+1\n";
    }

    if (d >= 1) {
        report("pd-bound", pd_bound_check(complex, field));
        report("cm-inheritance", cm_inheritance_check(complex, field));
        BettiTable direct = hochster_table(complex.skeleton(d - 1), field);
        BettiTable closed = transfer(TransferInput{table, n, d});
        report("transfer-vs-oracle", closed.entries == direct.entries);
    } else if (verbose) {
        std::cout << "SKIP pd-bound, cm-inheritance, transfer-vs-oracle (dimension 0)\n";
    }
}

int run_check(const std::string& facets_path, int random_count, int random_n,
              std::uint64_t seed, int field) {
    CheckStats stats;
    if (!facets_path.empty()) {
        check_one(complex_from_file(facets_path), field, true, stats);
    } else {
        std::mt19937_64 rng(seed);
        for (int k = 0; k < random_count; ++k) {
            SimplicialComplex c = random_complex(rng, random_n);
            int before = stats.failures;
            check_one(c, field, false, stats);
            if (stats.failures != before)
                std::cout << "complex #" << k << " with facets failed checks above\n";
        }
        std::cout << random_count << " random complexes on " << random_n
                  << " vertices, field GF(" << field << "): " << stats.failures << " failures\n";
    }
    if (stats.failures == 0) std::cout << "all checks passed\n";
    return stats.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded Betti numbers of Stanley-Reisner rings: Hochster-formula "
                 "computation, closed-form skeleton transfer, matroid operations"};
    app.require_subcommand(1);

    std::string facets_path, bases_path, table_path, complex_path;
    std::string convention = "ring", format = "table";
    int field = 2, steps = 1, dim_flag = -1, index = 0;
    int random_count = 0, random_n = 7;
    std::uint64_t seed = 42;
    bool verify = false, strict = false;
    int rc = 0;

    auto* info = app.add_subcommand("info", "Summarize a complex or matroid file");
    info->add_option("--facets", facets_path, "facet file of a simplicial complex");
    info->add_option("--bases", bases_path, "basis file of a matroid");
    info->callback([&] {
        if (facets_path.empty() == bases_path.empty())
            throw CLI::ValidationError("info", "give exactly one of --facets / --bases");
        rc = run_info(facets_path, bases_path);
    });

    auto* betti = app.add_subcommand("betti", "Betti table via Hochster's formula");
    betti->add_option("--facets", facets_path, "facet file of a simplicial complex");
    betti->add_option("--bases", bases_path, "basis file of a matroid");
    betti->add_option("--field", field, "prime field characteristic")->capture_default_str();
    betti->add_option("--convention", convention, "ring or ideal indexing")
        ->check(CLI::IsMember({"ring", "ideal"}))
        ->capture_default_str();
    betti->add_option("--format", format, "table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    betti->callback([&] {
        if (facets_path.empty() == bases_path.empty())
            throw CLI::ValidationError("betti", "give exactly one of --facets / --bases");
        rc = run_betti(facets_path, bases_path, field, convention, format);
    });

    auto* transfer_cmd = app.add_subcommand(
        "transfer", "Closed-form Betti table of skeletons, from a complex or a table");
    transfer_cmd->add_option("--complex", complex_path, "facet file (table computed first)");
    transfer_cmd->add_option("--table", table_path, "Betti table as JSON");
    transfer_cmd->add_option("--field", field, "prime field characteristic")
        ->capture_default_str();
    transfer_cmd->add_option("--steps", steps, "how many skeleton steps")->capture_default_str();
    transfer_cmd->add_option("--dim", dim_flag,
                             "dimension of the complex behind a --table input "
                             "(default: inferred from the Hilbert numerator)");
    transfer_cmd->add_flag("--verify", verify,
                           "also compute each skeleton table directly and compare");
    transfer_cmd->add_option("--format", format, "table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    transfer_cmd->callback([&] {
        if (complex_path.empty() == table_path.empty())
            throw CLI::ValidationError("transfer", "give exactly one of --complex / --table");
        rc = run_transfer(complex_path, table_path, field, steps, dim_flag, verify, format);
    });

    auto* matroid_cmd = app.add_subcommand("matroid", "Matroid operations on a basis file");
    matroid_cmd->require_subcommand(1);
    auto add_transform = [&](const std::string& name, const std::string& help, bool needs_index) {
        auto* sub = matroid_cmd->add_subcommand(name, help);
        sub->add_option("file", bases_path, "basis file")->required();
        if (needs_index) sub->add_option("-i,--index", index, "steps")->required();
        sub->add_flag("--strict", strict, "exhaustive exchange validation");
        sub->callback([&, name] { rc = run_matroid_transform(bases_path, name, index, strict); });
    };
    add_transform("truncate", "Drop the rank by i (bases of the result printed)", true);
    add_transform("elongate", "Raise the rank by i (bases of the result printed)", true);
    add_transform("dual", "Complement the bases", false);
    auto* mbetti = matroid_cmd->add_subcommand("betti",
                                               "Betti table of the independence complex");
    mbetti->add_option("file", bases_path, "basis file")->required();
    mbetti->add_option("--field", field, "prime field characteristic")->capture_default_str();
    mbetti->add_option("--convention", convention, "ring or ideal indexing")
        ->check(CLI::IsMember({"ring", "ideal"}))
        ->capture_default_str();
    mbetti->add_option("--format", format, "table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    mbetti->add_flag("--strict", strict, "exhaustive exchange validation");
    mbetti->callback([&] { rc = run_matroid_betti(bases_path, field, convention, format, strict); });
    auto* shift = matroid_cmd->add_subcommand(
        "shift-check", "Support shift between consecutive elongations, all levels");
    shift->add_option("file", bases_path, "basis file")->required();
    shift->add_flag("--strict", strict, "exhaustive exchange validation");
    shift->callback([&] { rc = run_shift_check(bases_path, strict); });
    matroid_cmd
        ->add_subcommand("counterexample",
                         "Two matroids with equal tables but different elongation tables")
        ->callback([&] { rc = run_counterexample(); });

    auto* check = app.add_subcommand("check", "Verification suite on a complex or fuzz corpus");
    check->add_option("--facets", facets_path, "facet file of a simplicial complex");
    check->add_option("--random", random_count, "number of random complexes instead of a file");
    check->add_option("--n", random_n, "ground-set size for --random")->capture_default_str();
    check->add_option("--seed", seed, "seed for --random")->capture_default_str();
    check->add_option("--field", field, "prime field characteristic")->capture_default_str();
    check->callback([&] {
        if (facets_path.empty() == (random_count == 0))
            throw CLI::ValidationError("check", "give exactly one of --facets / --random");
        rc = run_check(facets_path, random_count, random_n, seed, field);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InconsistentTable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const FieldDependenceBug& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}
