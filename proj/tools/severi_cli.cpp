// severi: exact Severi-degree queries, tables and verification runs for
// rational curves on P2, P1xP1 and the Hirzebruch surfaces.
//
// Exit codes: 0 success, 1 usage error, 2 verification mismatch,
//             3 missing external data.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <severi/severi.hpp>

namespace {

using namespace severi;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_mismatch = 2;
constexpr int exit_missing_data = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Surface parse_surface(const std::string& text) {
    auto s = Surface::from_tag(text);
    if (!s) throw UsageError("unknown surface '" + text + "' (expected p2, q or f<n>)");
    return *s;
}

std::vector<long long> parse_coords(const std::string& text) {
    std::vector<long long> coords;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            coords.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw UsageError("bad class coordinate '" + token + "'");
        }
        // lattice arithmetic runs in machine integers; keep products in range
        if (std::abs(coords.back()) > 1000000)
            throw UsageError("class coordinates must have magnitude <= 1000000");
    }
    if (coords.empty()) throw UsageError("empty class coordinates");
    return coords;
}

DivisorClass parse_class(const Surface& s, const std::string& text) {
    auto coords = parse_coords(text);
    if (static_cast<int>(coords.size()) != s.rank())
        throw UsageError("surface " + s.tag() + " needs " + std::to_string(s.rank())
                         + " class coordinate(s), got " + std::to_string(coords.size()));
    return DivisorClass(s, coords);
}

NTable load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open table file '" + path + "'");
    return load_table(in);
}

void save_table_file(const NTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write table file '" + path + "'");
    save_table(table, out);
}

void merge_into(NTable& dst, const NTable& src) {
    for (const auto& [key, entry] : src) {
        DivisorClass d(key.surface, key.coords);
        if (const TableEntry* existing = dst.find(d, key.tangency)) {
            if (existing->value != entry.value)
                throw UsageError("conflicting table entries for (" + key.surface.tag() + ", i="
                                 + std::to_string(key.tangency) + ")");
            continue;
        }
        dst.set(d, key.tangency, entry.value, entry.provenance);
    }
}

// ---- count -----------------------------------------------------------------

struct CountOptions {
    std::string surface;
    std::string cls;
    int tangency = 1;
    std::string tangential_file;
    std::string load_file;
    std::string save_file;
};

int run_count(const CountOptions& opt) {
    Surface s = parse_surface(opt.surface);
    DivisorClass d = parse_class(s, opt.cls);
    if (opt.tangency < 1) throw UsageError("--tangency must be >= 1");

    NTable base;
    if (!opt.load_file.empty()) base = load_table_file(opt.load_file);
    if (!opt.tangential_file.empty()) merge_into(base, load_table_file(opt.tangential_file));

    TangentialDegreeTable table(std::move(base));
    Count value = table.resolve(d, opt.tangency);
    std::cout << value << "\n";

    if (!opt.save_file.empty()) save_table_file(table.base(), opt.save_file);
    return exit_ok;
}

// ---- table -----------------------------------------------------------------

struct TableOptions {
    std::string surface;
    long long max_c = -1, max_f = -1; // Fn bounds
    long long max_a = -1, max_b = -1; // quadric bounds
    long long max_d = -1;             // plane bound
    std::string format = "text";
    std::string load_file;
    std::string save_file;
};

void print_grid(const Surface& s, long long rows, long long cols,
                const std::vector<std::vector<Count>>& values,
                const std::string& row_name, const std::string& col_name) {
    if (s.rank() == 1) {
        std::cout << "N(D) on " << s.tag() << "\n";
        for (long long r = 0; r <= rows; ++r)
            std::cout << row_name << "=" << r << "  " << values[r][0] << "\n";
        return;
    }
    std::vector<std::size_t> width(cols + 1);
    std::vector<std::vector<std::string>> text(rows + 1, std::vector<std::string>(cols + 1));
    for (long long r = 0; r <= rows; ++r)
        for (long long c = 0; c <= cols; ++c) {
            text[r][c] = values[r][c].str();
            width[c] = std::max(width[c], text[r][c].size());
        }
    std::size_t head = row_name.size() + 6;
    std::cout << "N(D) on " << s.tag() << "\n" << std::string(head, ' ');
    for (long long c = 0; c <= cols; ++c) {
        std::string label = col_name + "=" + std::to_string(c);
        width[c] = std::max(width[c], label.size());
        std::cout << "  " << std::setw(static_cast<int>(width[c])) << label;
    }
    std::cout << "\n";
    for (long long r = 0; r <= rows; ++r) {
        std::ostringstream label;
        label << row_name << "=" << r;
        std::cout << std::left << std::setw(static_cast<int>(head)) << label.str() << std::right;
        for (long long c = 0; c <= cols; ++c)
            std::cout << "  " << std::setw(static_cast<int>(width[c])) << text[r][c];
        std::cout << "\n";
    }
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

int run_table(const TableOptions& opt) {
    Surface s = parse_surface(opt.surface);

    long long rows = 0, cols = 0;
    std::string row_name, col_name;
    switch (s.kind()) {
        case Surface::Kind::plane:
            if (opt.max_d < 0) throw UsageError("table on p2 needs --max-d");
            rows = opt.max_d;
            row_name = "d";
            break;
        case Surface::Kind::quadric:
            if (opt.max_a < 0 || opt.max_b < 0) throw UsageError("table on q needs --max-a and --max-b");
            rows = opt.max_a;
            cols = opt.max_b;
            row_name = "a";
            col_name = "b";
            break;
        case Surface::Kind::hirzebruch:
            if (opt.max_c < 0 || opt.max_f < 0)
                throw UsageError("table on " + s.tag() + " needs --max-c and --max-f");
            rows = opt.max_c;
            cols = opt.max_f;
            row_name = "c";
            col_name = "f";
            break;
    }

    NTable table;
    if (!opt.load_file.empty()) table = load_table_file(opt.load_file);

    std::vector<std::vector<Count>> values(rows + 1, std::vector<Count>(cols + 1));
    for (long long r = 0; r <= rows; ++r)
        for (long long c = 0; c <= cols; ++c) {
            std::vector<long long> coords = s.rank() == 1 ? std::vector<long long>{r}
                                                          : std::vector<long long>{r, c};
            values[r][c] = severi_degree(DivisorClass(s, coords), table);
        }

    if (opt.format == "text") {
        print_grid(s, rows, s.rank() == 1 ? 0 : cols, values, row_name, col_name);
    } else if (opt.format == "json") {
        nlohmann::ordered_json all = nlohmann::ordered_json::array();
        for (long long r = 0; r <= rows; ++r)
            for (long long c = 0; c <= cols; ++c) {
                nlohmann::ordered_json record;
                record["surface"] = s.tag();
                record["coords"] = s.rank() == 1 ? std::vector<long long>{r}
                                                 : std::vector<long long>{r, c};
                record["i"] = 1;
                record["value"] = values[r][c].str();
                all.push_back(record);
            }
        std::cout << all.dump(2) << "\n";
    } else if (opt.format == "csv") {
        std::cout << "surface,coords,i,value\n";
        for (long long r = 0; r <= rows; ++r)
            for (long long c = 0; c <= cols; ++c) {
                std::string coords = s.rank() == 1 ? std::to_string(r)
                                                   : std::to_string(r) + "," + std::to_string(c);
                std::cout << s.tag() << "," << csv_field(coords) << ",1,"
                          << values[r][c].str() << "\n";
            }
    } else {
        throw UsageError("unknown format '" + opt.format + "' (expected text, json or csv)");
    }

    if (!opt.save_file.empty()) save_table_file(table, opt.save_file);
    return exit_ok;
}

// ---- verify-2c ---------------------------------------------------------------

int run_verify_2c(int n_from, int n_through) {
    if (n_from < 1) throw UsageError("--n must be >= 1");
    if (n_through < n_from) throw UsageError("--through must be >= --n");
    bool all_ok = true;
    for (int n = n_from; n <= n_through; ++n) {
        Count closed = closed_2c(n);
        Count alt = altsum_2c(n);
        Count gen = genfunc_2c(n);
        Count oracle = oracle_2c(n);
        bool ok = closed == alt && alt == gen && gen == oracle;
        std::cout << "n=" << n << " N(2C)=" << closed << (ok ? " ok" : " MISMATCH") << "\n";
        if (!ok) {
            std::cout << "  closed=" << closed << " altsum=" << alt << " genfunc=" << gen
                      << " oracle=" << oracle << "\n";
            all_ok = false;
        }
    }
    return all_ok ? exit_ok : exit_mismatch;
}

// ---- ledger ------------------------------------------------------------------

void print_ledger_terms(const std::vector<LedgerTerm>& terms) {
    for (const auto& t : terms) {
        std::cout << "  k=" << t.k << "  " << std::left << std::setw(40) << t.label
                  << std::right << " count=" << t.count << "  mult=" << t.multiplicity
                  << "  total=" << t.contribution() << "\n";
    }
}

int run_ledger(int n, const std::string& format) {
    if (n < 1) throw UsageError("--n must be >= 1");
    DegenerationLedger ledger = ledger_2c(n);
    Count solved = oracle_2c(n);
    if (format == "text") {
        std::cout << "degeneration ledger for |2C| on F" << n << "\n";
        std::cout << "zeroes  (plus the irreducible contribution " << n << "*N):\n";
        print_ledger_terms(ledger.zero_terms);
        std::cout << "  zero-side reducible total = " << ledger.zero_total() << "\n";
        std::cout << "poles:\n";
        print_ledger_terms(ledger.pole_terms);
        std::cout << "  pole-side total = " << ledger.pole_total() << "\n";
        std::cout << "balance: " << n << "*N + " << ledger.zero_total() << " = "
                  << ledger.pole_total() << "  =>  N(2C) = " << solved << "\n";
    } else if (format == "json") {
        auto encode = [](const std::vector<LedgerTerm>& terms) {
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (const auto& t : terms) {
                nlohmann::ordered_json record;
                record["k"] = t.k;
                record["label"] = t.label;
                record["count"] = t.count.str();
                record["multiplicity"] = t.multiplicity;
                list.push_back(record);
            }
            return list;
        };
        nlohmann::ordered_json out;
        out["n"] = n;
        out["zero_terms"] = encode(ledger.zero_terms);
        out["pole_terms"] = encode(ledger.pole_terms);
        out["zero_total"] = ledger.zero_total().str();
        out["pole_total"] = ledger.pole_total().str();
        out["solved"] = solved.str();
        std::cout << out.dump(2) << "\n";
    } else {
        throw UsageError("unknown format '" + format + "' (expected text or json)");
    }
    return exit_ok;
}

// ---- fn-rhs ------------------------------------------------------------------

int run_fn_rhs(int n, const std::string& cls, const std::string& tangential_file) {
    if (n < 1) throw UsageError("--n must be >= 1");
    Surface s = Surface::hirzebruch(n);
    DivisorClass d = parse_class(s, cls);

    NTable base;
    if (!tangential_file.empty()) base = load_table_file(tangential_file);
    TangentialDegreeTable table(std::move(base));

    Count rhs = fn_rhs(d, table);
    std::cout << "rhs = " << rhs << "\n";
    if (rhs % n == 0) {
        std::cout << "rhs/n = " << rhs / n << "\n";
    } else {
        Rational exact(rhs, n);
        std::cout << "rhs/n = " << boost::multiprecision::numerator(exact) << "/"
                  << boost::multiprecision::denominator(exact) << "\n";
    }
    return exit_ok;
}

// ---- cache -------------------------------------------------------------------

int run_cache(const std::string& load_file, const std::string& save_file) {
    NTable table = load_table_file(load_file);
    std::size_t computed = 0, seeded = 0, external = 0;
    for (const auto& [key, entry] : table) {
        switch (entry.provenance) {
            case Provenance::computed: ++computed; break;
            case Provenance::seeded: ++seeded; break;
            case Provenance::external: ++external; break;
        }
    }
    std::cout << "entries: " << table.size() << " (computed " << computed << ", seeded "
              << seeded << ", external " << external << ")\n";
    if (!save_file.empty()) save_table_file(table, save_file);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Severi degrees of rational curves on P2, P1xP1 and Hirzebruch surfaces"};
    app.require_subcommand(1);

    CountOptions count_opt;
    auto* count = app.add_subcommand("count", "print N(D), or N_i(D) with --tangency");
    count->add_option("--surface", count_opt.surface, "p2, q or f<n>")->required();
    count->add_option("--class", count_opt.cls, "comma-separated class coordinates")->required();
    count->add_option("--tangency", count_opt.tangency, "contact order i (default 1)");
    count->add_option("--tangential", count_opt.tangential_file, "tangential degree table file");
    count->add_option("--load", count_opt.load_file, "preload a cached N-table");
    count->add_option("--save", count_opt.save_file, "save the N-table afterwards");

    TableOptions table_opt;
    auto* table = app.add_subcommand("table", "print a grid of Severi degrees");
    table->add_option("--surface", table_opt.surface, "p2, q or f<n>")->required();
    table->add_option("--max-c", table_opt.max_c, "Fn: largest multiple of C");
    table->add_option("--max-f", table_opt.max_f, "Fn: largest multiple of F");
    table->add_option("--max-a", table_opt.max_a, "q: largest first bidegree");
    table->add_option("--max-b", table_opt.max_b, "q: largest second bidegree");
    table->add_option("--max-d", table_opt.max_d, "p2: largest degree");
    table->add_option("--format", table_opt.format, "text (default), json or csv");
    table->add_option("--load", table_opt.load_file, "preload a cached N-table");
    table->add_option("--save", table_opt.save_file, "save the N-table afterwards");

    int verify_n = 0, verify_through = 0;
    auto* verify = app.add_subcommand("verify-2c",
                                      "check the four routes to N(2C) against each other");
    verify->add_option("--n", verify_n, "first Hirzebruch index")->required();
    verify->add_option("--through", verify_through, "last index (default: --n)");

    int ledger_n = 0;
    std::string ledger_format = "text";
    auto* ledger = app.add_subcommand("ledger", "dump the |2C| degeneration ledger");
    ledger->add_option("--n", ledger_n, "Hirzebruch index")->required();
    ledger->add_option("--format", ledger_format, "text (default) or json");

    int rhs_n = 0;
    std::string rhs_class, rhs_tangential;
    auto* rhs = app.add_subcommand("fn-rhs",
                                   "evaluate the general-Fn relation's right-hand side");
    rhs->add_option("--n", rhs_n, "Hirzebruch index")->required();
    rhs->add_option("--class", rhs_class, "comma-separated class coordinates")->required();
    rhs->add_option("--tangential", rhs_tangential, "tangential degree table file");

    std::string cache_load, cache_save;
    auto* cache = app.add_subcommand("cache", "inspect and rewrite a cached N-table");
    cache->add_option("--load", cache_load, "table file to read")->required();
    cache->add_option("--save", cache_save, "write the table back in canonical form");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n"
                  << "run '" << (argc > 0 ? argv[0] : "severi") << " --help' for usage\n";
        return exit_usage;
    }

    try {
        if (count->parsed()) return run_count(count_opt);
        if (table->parsed()) return run_table(table_opt);
        if (verify->parsed())
            return run_verify_2c(verify_n, verify_through == 0 ? verify_n : verify_through);
        if (ledger->parsed()) return run_ledger(ledger_n, ledger_format);
        if (rhs->parsed()) return run_fn_rhs(rhs_n, rhs_class, rhs_tangential);
        if (cache->parsed()) return run_cache(cache_load, cache_save);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ExcludedClass& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "the exceptional curve E = C - nF carries no Severi degree; every\n"
                  << "recursion sums over classes other than E\n";
        return exit_usage;
    } catch (const MissingDegree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_missing_data;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
