#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmk/affine_strings.hpp"
#include "kmk/cartan.hpp"
#include "kmk/errors.hpp"
#include "kmk/hall_littlewood.hpp"
#include "kmk/kostka.hpp"
#include "kmk/series.hpp"
#include "kmk/weyl.hpp"

using json = nlohmann::ordered_json;
using namespace kmk;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;
constexpr int kExitAlgebra = 3;
constexpr int kExitGuard = 4;

struct Config {
    std::string algebra;
    std::string matrix;
    std::vector<long long> weight;
    long long delta = 0;
    std::vector<long long> mu;
    long long mu_delta = 0;
    bool mu_set = false;
    long long depth = 4;
    int order = 4;
    int tcap = 3;
    long long dw = 3;
    int node = 0;
    std::string format = "json";
};

long long binomial_ll(long long n, long long k) {
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Crude cone-size estimate against the configured memory guard.
void check_guard(int rank, long long depth) {
    long long mb = 512;
    if (const char* env = std::getenv("KMK_MEMORY_GUARD_MB")) mb = std::atoll(env);
    long long points = binomial_ll(depth + rank, rank);
    long long bytes = points * (depth + 2) * 24;
    if (bytes > mb * (1LL << 20))
        throw ResourceGuard("estimated " + std::to_string(bytes >> 20) + " MB exceeds guard of " +
                            std::to_string(mb) + " MB (set KMK_MEMORY_GUARD_MB)");
}

CartanDatum load_algebra(const Config& cfg) {
    if (!cfg.matrix.empty()) {
        std::vector<std::vector<long long>> rows;
        std::stringstream ss(cfg.matrix);
        std::string row;
        while (std::getline(ss, row, ';')) {
            std::vector<long long> r;
            std::stringstream rs(row);
            std::string cell;
            while (std::getline(rs, cell, ',')) r.push_back(std::stoll(cell));
            rows.push_back(std::move(r));
        }
        return CartanDatum::validate(rows);
    }
    if (cfg.algebra.empty()) throw Error("no algebra given (use --algebra or --matrix)");
    return CartanDatum::from_name(cfg.algebra);
}

Weight load_weight(const CartanDatum& d, const std::vector<long long>& labels, long long delta) {
    if (static_cast<int>(labels.size()) != d.rank())
        throw Error("weight has " + std::to_string(labels.size()) + " labels, algebra has rank " +
                    std::to_string(d.rank()));
    return d.weight_from_labels(labels, Rat(delta));
}

json weight_json(const CartanDatum& d, const Weight& w) {
    json j;
    std::vector<long long> labels;
    for (const Rat& l : w.labels) labels.push_back(l.to_integer());
    j["labels"] = labels;
    if (d.affine()) j["delta"] = w.delta.to_integer();
    return j;
}

json poly_json(const Poly& p) {
    return json(p.coeffs());
}

std::string latex_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        long long a = p.coeff(k);
        if (a == 0) continue;
        if (!out.empty()) out += a > 0 ? " + " : " - ";
        else if (a < 0) out += "-";
        long long m = a < 0 ? -a : a;
        if (m != 1 || k == 0) out += std::to_string(m);
        if (k == 1) out += "t";
        if (k > 1) out += "t^{" + std::to_string(k) + "}";
    }
    return out;
}

std::string plain_weight(const CartanDatum& d, const Weight& w) {
    std::string s;
    for (size_t i = 0; i < w.labels.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.labels[i].to_integer());
    }
    if (d.affine() && !w.delta.is_zero()) s += ";" + std::to_string(w.delta.to_integer());
    return s;
}

void emit(const json& j, const Config& cfg) {
    if (cfg.format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        std::cout << "mu_labels,mu_delta,poly\n";
        for (const auto& row : j.at("rows")) {
            std::string labels;
            for (const auto& x : row.at("mu").at("labels")) {
                if (!labels.empty()) labels += " ";
                labels += x.dump();
            }
            std::string poly;
            for (const auto& x : row.at("poly")) {
                if (!poly.empty()) poly += " ";
                poly += x.dump();
            }
            long long delta = row.at("mu").contains("delta") ? row.at("mu").at("delta").get<long long>() : 0;
            std::cout << labels << "," << delta << "," << poly << "\n";
        }
        return;
    }
    throw Error("unknown format: " + cfg.format);
}

int run_kostka(const Config& cfg) {
    CartanDatum d = load_algebra(cfg);
    check_guard(d.rank(), cfg.depth);
    Weight lambda = load_weight(d, cfg.weight, cfg.delta);
    RootSlice slice = d.roots_up_to(std::max<long long>(cfg.depth, 1));
    KostkaTable table = kostka_table(d, lambda, cfg.depth, slice);

    json out;
    out["schema_version"] = 1;
    out["command"] = "kostka";
    out["algebra"] = d.name();
    out["lambda"] = weight_json(d, lambda);
    out["depth"] = cfg.depth;
    out["rows"] = json::array();
    if (cfg.format == "latex") {
        for (const auto& [key, p] : table.entries) {
            Weight mu = lambda - d.root_to_weight(RootVector(key));
            std::cout << "K_{(" << plain_weight(d, lambda) << "),(" << plain_weight(d, mu)
                      << ")}(t) &= " << latex_poly(p) << " \\\\\n";
        }
        return kExitOk;
    }
    for (const auto& [key, p] : table.entries) {
        Weight mu = lambda - d.root_to_weight(RootVector(key));
        json row;
        row["mu"] = weight_json(d, mu);
        row["poly"] = poly_json(p);
        out["rows"].push_back(row);
    }
    emit(out, cfg);
    return kExitOk;
}

int run_hl(const Config& cfg) {
    CartanDatum d = load_algebra(cfg);
    check_guard(d.rank(), cfg.depth);
    Weight lambda = load_weight(d, cfg.weight, cfg.delta);
    RootSlice slice = d.roots_up_to(std::max<long long>(cfg.depth, 1));
    HLExpansion exp = c_expansion(d, lambda, cfg.depth, slice);

    json out;
    out["schema_version"] = 1;
    out["command"] = "hl";
    out["algebra"] = d.name();
    out["lambda"] = weight_json(d, lambda);
    out["depth"] = cfg.depth;
    out["rows"] = json::array();
    if (cfg.format == "latex") {
        for (const auto& [key, p] : exp.c) {
            Weight mu = lambda - d.root_to_weight(RootVector(key));
            std::cout << "c_{(" << plain_weight(d, lambda) << "),(" << plain_weight(d, mu)
                      << ")}(t) &= " << latex_poly(p) << " \\\\\n";
        }
        return kExitOk;
    }
    for (const auto& [key, p] : exp.c) {
        Weight mu = lambda - d.root_to_weight(RootVector(key));
        json row;
        row["mu"] = weight_json(d, mu);
        row["poly"] = poly_json(p);
        out["rows"].push_back(row);
    }
    emit(out, cfg);
    return kExitOk;
}

int run_string(const Config& cfg) {
    CartanDatum d = load_algebra(cfg);
    if (!d.affine()) throw UnsupportedType("t-string functions need an affine algebra (name~)");
    check_guard(d.rank(), static_cast<long long>(cfg.order) * d.delta_height() + 8);
    Weight lambda = load_weight(d, cfg.weight, cfg.delta);
    Weight mu = cfg.mu_set ? load_weight(d, cfg.mu, cfg.mu_delta) : lambda;
    StringFunction sf = t_string(d, lambda, mu, cfg.order);

    json out;
    out["schema_version"] = 1;
    out["command"] = "string";
    out["algebra"] = d.name();
    out["lambda"] = weight_json(d, lambda);
    out["mu"] = weight_json(d, mu);
    out["order"] = cfg.order;
    json coeffs = json::array();
    for (int k = 0; k <= sf.series.order(); ++k) coeffs.push_back(poly_json(sf.series.at(k)));
    out["coefficients"] = coeffs;
    if (cfg.format == "latex") {
        for (int k = 0; k <= sf.series.order(); ++k)
            std::cout << "[q^{" << k << "}] \\, a^{\\lambda}_{\\mu}(t) &= "
                      << latex_poly(sf.series.at(k)) << " \\\\\n";
        return kExitOk;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_verify(const std::string& identity, const Config& cfg) {
    CartanDatum d = load_algebra(cfg);
    Report rep;
    if (identity == "dellm") {
        check_guard(d.rank(), cfg.depth);
        Weight lambda = load_weight(d, cfg.weight, cfg.delta);
        rep = verify_dellm(d, lambda, cfg.depth, d.roots_up_to(std::max<long long>(cfg.depth, 1)));
    } else if (identity == "prop61") {
        Weight lambda = load_weight(d, cfg.weight, cfg.delta);
        rep = verify_prop61(d, lambda, cfg.node);
    } else if (identity == "macdonald") {
        rep = macdonald_identity_check(d, cfg.tcap, cfg.dw);
    } else if (identity == "level0") {
        check_guard(d.rank(), static_cast<long long>(cfg.order) * (d.affine() ? d.delta_height() : 1));
        rep = level0_check(d, cfg.order);
    } else if (identity == "level1") {
        check_guard(d.rank(), static_cast<long long>(cfg.order) * (d.affine() ? d.delta_height() : 1));
        rep = level1_check(d, cfg.order);
    } else if (identity == "stembridge") {
        check_guard(d.rank(), cfg.depth);
        Weight lambda = load_weight(d, cfg.weight, cfg.delta);
        long long bound = cfg.depth;
        int tcap = -1;
        if (d.affine()) {
            tcap = cfg.tcap;
            bound = cfg.depth + static_cast<long long>(tcap) * d.delta_height();
        }
        rep = verify_stembridge(d, lambda, cfg.depth, d.roots_up_to(std::max<long long>(bound, 1)), tcap);
    } else if (identity == "tensor-minus-one") {
        check_guard(d.rank(), cfg.depth);
        Weight lambda = load_weight(d, cfg.weight, cfg.delta);
        auto res = specialize_hl(d, lambda, -1, cfg.depth,
                                 d.roots_up_to(std::max<long long>(cfg.depth, 1)));
        if (!res.has_tensor_report) throw Error("tensor report needs a finite algebra");
        rep = res.tensor_report;
    } else {
        throw Error("unknown identity: " + identity +
                    " (expected dellm|prop61|macdonald|level0|level1|stembridge|tensor-minus-one)");
    }

    if (cfg.format == "json") {
        json out;
        out["schema_version"] = 1;
        out["command"] = "verify";
        out["identity"] = rep.identity;
        out["algebra"] = d.name();
        out["pass"] = rep.pass;
        out["details"] = rep.lines;
        out["first_mismatch"] = rep.first_mismatch;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& line : rep.lines) std::cout << "  " << line << "\n";
        if (!rep.pass) std::cout << "  first mismatch: " << rep.first_mismatch << "\n";
        std::cout << (rep.pass ? "PASS" : "FAIL") << " " << rep.identity << " (" << d.name() << ")\n";
    }
    return rep.pass ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kostka-Foulkes polynomials, Hall-Littlewood functions and affine t-string functions"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub, bool with_weight) {
        sub->add_option("--algebra", cfg.algebra, "algebra name, e.g. A2, G2, A1~, D4~");
        sub->add_option("--matrix", cfg.matrix, "explicit Cartan matrix, rows ';'-separated: \"2,-1;-1,2\"");
        sub->add_option("--format", cfg.format, "output format: json|csv|latex")->default_str("json");
        if (with_weight) {
            sub->add_option("--weight", cfg.weight, "weight labels, comma separated")->delimiter(',');
            sub->add_option("--delta", cfg.delta, "delta coefficient of the weight (affine)");
        }
    };

    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka-Foulkes table for a highest weight");
    add_common(kostka_cmd, true);
    kostka_cmd->add_option("--depth", cfg.depth, "cone depth in root-lattice height");

    auto* hl_cmd = app.add_subcommand("hl", "Hall-Littlewood expansion coefficients c_{lambda,mu}(t)");
    add_common(hl_cmd, true);
    hl_cmd->add_option("--depth", cfg.depth, "cone depth in root-lattice height");

    auto* string_cmd = app.add_subcommand("string", "t-string function along a delta-string");
    add_common(string_cmd, true);
    string_cmd->add_option("--mu", cfg.mu, "string base point labels (default: lambda)")
        ->delimiter(',')
        ->each([&](const std::string&) { cfg.mu_set = true; });
    string_cmd->add_option("--mu-delta", cfg.mu_delta, "delta coefficient of mu");
    string_cmd->add_option("--order", cfg.order, "q-order of the string function");

    auto* verify_cmd = app.add_subcommand("verify", "machine-check one of the built-in identities");
    std::string identity;
    verify_cmd->add_option("identity", identity,
                           "dellm|prop61|macdonald|level0|level1|stembridge|tensor-minus-one")
        ->required();
    add_common(verify_cmd, true);
    verify_cmd->add_option("--depth", cfg.depth, "cone depth");
    verify_cmd->add_option("--order", cfg.order, "q-order");
    verify_cmd->add_option("--tcap", cfg.tcap, "t-degree cap (macdonald, affine stembridge)");
    verify_cmd->add_option("--dw", cfg.dw, "weight depth (macdonald)");
    verify_cmd->add_option("--node", cfg.node, "Dynkin node for prop61");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (kostka_cmd->parsed()) return run_kostka(cfg);
        if (hl_cmd->parsed()) return run_hl(cfg);
        if (string_cmd->parsed()) return run_string(cfg);
        if (verify_cmd->parsed()) return run_verify(identity, cfg);
    } catch (const ResourceGuard& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const UnsupportedType& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAlgebra;
    } catch (const NotGCM& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAlgebra;
    } catch (const NotSymmetrizable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAlgebra;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
