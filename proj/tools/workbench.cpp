#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "abelian/apparent.hpp"
#include "abelian/code.hpp"
#include "abelian/distance.hpp"
#include "abelian/errors.hpp"
#include "abelian/io.hpp"

namespace {

using namespace abelian;

Field parse_q(const std::string& q) {
    auto caret = q.find('^');
    std::uint32_t p = 0, m = 1;
    if (caret != std::string::npos) {
        p = (std::uint32_t)std::stoul(q.substr(0, caret));
        m = (std::uint32_t)std::stoul(q.substr(caret + 1));
    } else {
        std::uint64_t n = std::stoull(q);
        if (n < 2) throw NonPrimeCharacteristic("q must be at least 2");
        std::uint64_t base = 2;
        while (n % base != 0) ++base;
        p = (std::uint32_t)base;
        std::uint64_t x = n;
        m = 0;
        while (x % base == 0) {
            x /= base;
            ++m;
        }
        if (x != 1)
            throw NonPrimeCharacteristic(q + " is not a prime power");
    }
    return make_field(p, m);
}

std::pair<std::uint32_t, std::uint32_t> parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        return {1, (std::uint32_t)std::stoul(s)};
    return {(std::uint32_t)std::stoul(s.substr(0, comma)),
            (std::uint32_t)std::stoul(s.substr(comma + 1))};
}

std::vector<std::uint32_t> parse_list(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back((std::uint32_t)std::stoul(tok));
    return out;
}

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass;
};

void print_checks(const std::vector<Check>& checks) {
    std::cout << "check\texpected\tcomputed\tstatus\n";
    for (const auto& c : checks)
        std::cout << c.name << "\t" << c.expected << "\t" << c.computed << "\t"
                  << (c.pass ? "PASS" : "FAIL") << "\n";
}

template <typename T, typename U>
void add_check(std::vector<Check>& checks, const std::string& name,
               const T& expected, const U& computed) {
    std::ostringstream e, c;
    e << expected;
    c << computed;
    checks.push_back({name, e.str(), c.str(), e.str() == c.str()});
}

bool reproduce_example_1(std::vector<Check>& checks) {
    Field f4 = make_field(2, 2);
    auto c1 = bch_bivariate(f4, 7, 9, {{}, {{3, 0}}});
    std::vector<IndexPair> listed{{0, 0}, {1, 0}, {3, 0}};
    for (std::uint32_t t = 0; t < 7; ++t) listed.push_back({t, 1});
    OrbitSet d1 = orbit_closure(listed, 7, 9, 4);
    add_check(checks, "example1.D(C1)", orbit_set_record(d1),
              orbit_set_record(c1->defining_set()));
    add_check(checks, "example1.dim(C1)", 35, c1->dimension());

    auto c2 = bch_bivariate(f4, 7, 9, {{{2, 0}}, {{3, 0}}});
    std::vector<IndexPair> extra{{0, 2}, {0, 3}, {0, 6}};
    OrbitSet d2 = d1.united_with(orbit_closure(extra, 7, 9, 4));
    add_check(checks, "example1.D(C2)", orbit_set_record(d2),
              orbit_set_record(c2->defining_set()));

    SdReport r1 = sd_star_matrix(orbit_matrix(c1->defining_set()));
    add_check(checks, "example1.sd*(M(D(C1)))", 3, r1.value);
    add_check(checks, "example1.C1.shortcut", true, r1.shortcut_applicable);
    SdReport r2 = sd_star_matrix(orbit_matrix(c2->defining_set()));
    add_check(checks, "example1.sd*(M(D(C2)))", 6, r2.value);
    return true;
}

bool reproduce_example_2(std::vector<Check>& checks) {
    Field f2 = make_field(2, 1);
    std::vector<IndexPair> gens{{0, 1}, {0, 5}};
    OrbitSet d = orbit_closure(gens, 1, 55, 2);
    auto c = code_from_defining_set(f2, d, {0, 1});
    add_check(checks, "example2.dim(C)", 25, c->dimension());

    auto matches = detect_bch_parameters(*c);
    bool found = false;
    for (const auto& match : matches)
        if (match.delta == 7 && match.b == 13 && match.multiplier == 1)
            found = true;
    add_check(checks, "example2.detect(delta,b)=(7,13)", true, found);

    auto c3 = multiply_dimension(c, 3);
    add_check(checks, "example2.dim(C_3)", 75, c3->dimension());
    add_check(checks, "example2.sd*(C_3)", 7, c3->sd_star().value);
    return true;
}

bool reproduce_example_3(std::vector<Check>& checks) {
    Field f256 = make_field(2, 8);
    auto rs = reed_solomon(f256, 33, 0);
    add_check(checks, "example3.dim(RS)", 223, rs->dimension());

    auto c5 = multiply_dimension(rs, 5);
    add_check(checks, "example3.dim(C_5)", 1115, c5->dimension());
    add_check(checks, "example3.sd*(C_5)", 33, c5->sd_star().value);

    DistanceCertificate cert =
        certify_distance(*c5, CertifyStrategy::kWitnessSdStar);
    add_check(checks, "example3.certified", true, cert.exact);
    add_check(checks, "example3.d(C_5)", 33, cert.value);
    return true;
}

int run(int argc, char** argv) {
    CLI::App app{"abelian code workbench"};
    app.require_subcommand(1);

    std::string q_str, r_str, in_path, out_path = "-", mult_str = "1,1";
    std::string delta_str, b_str, gamma_str = "2", defset_str, strategy = "both";
    std::uint32_t n = 2, orbit_cap = kDefaultMsdOrbitCap;
    std::uint64_t enum_cap = kDefaultEnumerationCap;
    int example = 0;

    auto* field_cmd = app.add_subcommand("field", "print the canonical field record");
    field_cmd->add_option("--q", q_str, "field size, p^m or integer")->required();

    auto* orbits_cmd = app.add_subcommand("orbits", "print the q-orbit partition of I");
    orbits_cmd->add_option("--q", q_str)->required();
    orbits_cmd->add_option("--r", r_str, "moduli r1,r2")->required();

    auto* construct_cmd = app.add_subcommand("construct",
                                             "code from the closure of index pairs");
    construct_cmd->add_option("--q", q_str)->required();
    construct_cmd->add_option("--r", r_str)->required();
    construct_cmd->add_option("--defset", defset_str,
                              "index pairs, e.g. [[0,1],[0,5]]")->required();
    construct_cmd->add_option("--multiplier", mult_str);
    construct_cmd->add_option("--out", out_path);

    auto* bch_cmd = app.add_subcommand("bch", "bivariate BCH code");
    bch_cmd->add_option("--q", q_str)->required();
    bch_cmd->add_option("--r", r_str)->required();
    bch_cmd->add_option("--gamma", gamma_str, "constrained axes, e.g. 2 or 1,2");
    bch_cmd->add_option("--delta", delta_str, "designed distances")->required();
    bch_cmd->add_option("--b", b_str, "offsets")->required();
    bch_cmd->add_option("--out", out_path);

    auto* rs_cmd = app.add_subcommand("rs", "Reed-Solomon code, r = q-1");
    rs_cmd->add_option("--q", q_str)->required();
    rs_cmd->add_option("--delta", delta_str)->required();
    rs_cmd->add_option("--b", b_str)->required();
    rs_cmd->add_option("--out", out_path);

    auto* multiply_cmd = app.add_subcommand("multiply",
                                            "dimension-multiplying construction");
    multiply_cmd->add_option("--in", in_path)->required();
    multiply_cmd->add_option("--n", n)->required();
    multiply_cmd->add_option("--cap", orbit_cap);
    multiply_cmd->add_option("--out", out_path);

    auto* sd_cmd = app.add_subcommand("sd-star", "code-level strong apparent distance");
    sd_cmd->add_option("--in", in_path)->required();
    sd_cmd->add_option("--cap", orbit_cap);

    auto* msd_cmd = app.add_subcommand("msd", "minimum strong apparent distance");
    msd_cmd->add_option("--in", in_path)->required();
    msd_cmd->add_option("--multiplier", mult_str);
    msd_cmd->add_option("--cap", orbit_cap);

    auto* detect_cmd = app.add_subcommand("detect-bch", "BCH parameter scan");
    detect_cmd->add_option("--in", in_path)->required();

    auto* mindist_cmd = app.add_subcommand("mindist", "exhaustive minimum distance");
    mindist_cmd->add_option("--in", in_path)->required();
    mindist_cmd->add_option("--cap", enum_cap);

    auto* certify_cmd = app.add_subcommand("certify", "distance certificate");
    certify_cmd->add_option("--in", in_path)->required();
    certify_cmd->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"exhaustive", "witness", "both"}));
    certify_cmd->add_option("--cap", enum_cap);

    auto* reproduce_cmd = app.add_subcommand("reproduce", "golden tables for the worked examples");
    reproduce_cmd->add_option("--example", example, "1, 2, 3, or 0 for all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (*field_cmd) {
        std::cout << field_record(parse_q(q_str)) << "\n";
    } else if (*orbits_cmd) {
        Field f = parse_q(q_str);
        auto [r1, r2] = parse_pair(r_str);
        OrbitSet empty = OrbitSet::empty(r1, r2, f->size);
        std::cout << "rep\tsize\tmembers\n";
        for (const auto& orbit : empty.free_orbits()) {
            std::cout << "[" << orbit[0].a << "," << orbit[0].b << "]\t"
                      << orbit.size() << "\t";
            for (std::size_t i = 0; i < orbit.size(); ++i)
                std::cout << (i ? "," : "") << "[" << orbit[i].a << ","
                          << orbit[i].b << "]";
            std::cout << "\n";
        }
    } else if (*construct_cmd) {
        Field f = parse_q(q_str);
        auto [r1, r2] = parse_pair(r_str);
        std::vector<IndexPair> pts;
        const char* s = defset_str.c_str();
        while (*s) {
            std::uint32_t a = 0, b = 0;
            int consumed = 0;
            if (std::sscanf(s, "[%u,%u]%n", &a, &b, &consumed) == 2) {
                pts.push_back({a, b});
                s += consumed;
            } else {
                ++s;
            }
        }
        auto [u, v] = parse_pair(mult_str);
        auto c = code_from_defining_set(f, orbit_closure(pts, r1, r2, f->size),
                                        {u, v});
        write_code_file(out_path, *c);
    } else if (*bch_cmd) {
        Field f = parse_q(q_str);
        auto [r1, r2] = parse_pair(r_str);
        auto gamma = parse_list(gamma_str);
        auto deltas = parse_list(delta_str);
        auto bs = parse_list(b_str);
        if (gamma.size() != deltas.size() || gamma.size() != bs.size())
            throw ParseError("gamma, delta and b must have equal lengths");
        BchSpec spec;
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            if (gamma[i] == 1)
                spec.axis1 = BchAxisSpec{deltas[i], bs[i]};
            else if (gamma[i] == 2)
                spec.axis2 = BchAxisSpec{deltas[i], bs[i]};
            else
                throw ParseError("gamma entries must be 1 or 2");
        }
        write_code_file(out_path, *bch_bivariate(f, r1, r2, spec));
    } else if (*rs_cmd) {
        Field f = parse_q(q_str);
        write_code_file(out_path, *reed_solomon(f, parse_list(delta_str)[0],
                                                parse_list(b_str)[0]));
    } else if (*multiply_cmd) {
        auto c = read_code_file(in_path);
        write_code_file(out_path, *multiply_dimension(c, n, orbit_cap));
    } else if (*sd_cmd) {
        auto c = read_code_file(in_path);
        SdCodeResult res = c->sd_star(orbit_cap);
        std::cout << "sd*\t" << res.value << "\n";
        std::cout << "optimized_multipliers\t";
        for (std::size_t i = 0; i < res.optimized_multipliers.size(); ++i)
            std::cout << (i ? "," : "") << "["
                      << res.optimized_multipliers[i].first << ","
                      << res.optimized_multipliers[i].second << "]";
        std::cout << "\n";
    } else if (*msd_cmd) {
        auto c = read_code_file(in_path);
        auto [u, v] = parse_pair(mult_str);
        OrbitSet d = apply_multiplier(c->defining_set(), u, v);
        OrbitMatrix m = orbit_matrix(d);
        std::cout << render_sd_report(sd_star_matrix(m));
        std::cout << "msd = " << msd(m, orbit_cap) << "\n";
    } else if (*detect_cmd) {
        auto c = read_code_file(in_path);
        std::cout << "delta\tb\tmultiplier\n";
        for (const auto& match : detect_bch_parameters(*c))
            std::cout << match.delta << "\t" << match.b << "\t"
                      << match.multiplier << "\n";
    } else if (*mindist_cmd) {
        auto c = read_code_file(in_path);
        std::cout << minimum_distance_exhaustive(*c, enum_cap) << "\n";
    } else if (*certify_cmd) {
        auto c = read_code_file(in_path);
        CertifyStrategy s = strategy == "exhaustive"
                                ? CertifyStrategy::kExhaustive
                                : strategy == "witness"
                                      ? CertifyStrategy::kWitnessSdStar
                                      : CertifyStrategy::kBoth;
        std::cout << certify_distance(*c, s, enum_cap).render();
    } else if (*reproduce_cmd) {
        std::vector<Check> checks;
        if (example == 0 || example == 1) reproduce_example_1(checks);
        if (example == 0 || example == 2) reproduce_example_2(checks);
        if (example == 0 || example == 3) reproduce_example_3(checks);
        if (example < 0 || example > 3)
            throw ParseError("--example must be 1, 2, 3, or 0 for all");
        print_checks(checks);
        for (const auto& c : checks)
            if (!c.pass) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const abelian::AlgebraError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
