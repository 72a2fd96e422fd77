// End-to-end acceptance suite. Each criterion prints one pass/fail line;
// the process exits nonzero if any criterion fails. argv[1] is the path to
// the CLI binary (used by the determinism criterion).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "generators.hpp"
#include "qstar/qstar.hpp"

using namespace qstar;
using qstar::testing::rng_t;

namespace {

struct check_failure {
    std::string what;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw check_failure{what};
}

rational abs_r(const rational& r) { return r < 0 ? -r : r; }

int g_failures = 0;

void criterion(int number, const std::string& title, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
        body();
    } catch (const check_failure& f) {
        failure = f.what;
    } catch (const std::exception& e) {
        failure = e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (failure.empty()) {
        std::printf("[PASS] criterion %d: %s (%lld ms)\n", number, title.c_str(),
                    static_cast<long long>(ms));
    } else {
        std::printf("[FAIL] criterion %d: %s — %s\n", number, title.c_str(), failure.c_str());
        ++g_failures;
    }
    std::fflush(stdout);
}

// ---- criterion 1 -----------------------------------------------------------

void two_representation_identity() {
    rng_t rng(1001);
    std::uniform_int_distribution<int> base_dist(2, 6);
    std::uniform_int_distribution<int> mlen(1, 8);
    for (int i = 0; i < 1000; ++i) {
        int s = base_dist(rng);
        qstar_system sys = testing::random_system(rng, s);
        std::vector<int> digits = testing::random_digits(rng, s, mlen(rng));
        if (digits.back() == 0) digits.back() = 1 + (i % (s - 1));
        std::vector<int> lowered = digits;
        lowered.back() -= 1;
        rational lhs = decode(sys, normalize({s, digits, {0}}));
        rational rhs = decode(sys, normalize({s, lowered, {s - 1}}));
        require(lhs == rhs, "representations differ at case " + std::to_string(i));
    }
}

// ---- criterion 2 -----------------------------------------------------------

void cylinder_algebra() {
    rng_t rng(1002);
    std::uniform_int_distribution<int> base_dist(2, 5);
    std::uniform_int_distribution<int> rank(1, 12);
    for (int i = 0; i < 500; ++i) {
        int s = base_dist(rng);
        qstar_system sys = testing::random_system(rng, s);
        std::vector<int> base = testing::random_digits(rng, s, rank(rng));
        cylinder_interval parent = cylinder(sys, base);

        // property 2/4: endpoints and exact length recursion
        std::vector<int> shorter(base.begin(), base.end() - 1);
        cylinder_interval up = cylinder(sys, shorter);
        require(parent.length() == sys.q(base.size(), base.back()) * up.length(),
                "length recursion failed");

        // property 1: children tile the parent
        rational cursor = parent.left;
        for (int d = 0; d < s; ++d) {
            std::vector<int> child = base;
            child.push_back(d);
            cylinder_interval c = cylinder(sys, child);
            require(c.left == cursor, "child does not start at previous end");
            cursor = c.right;
        }
        require(cursor == parent.right, "children do not reach the parent right end");
    }
}

// ---- criterion 3 -----------------------------------------------------------

void example1_levels() {
    qstar_system u5 = uniform_system(5);
    s_adic_param a{parse_digit_seq("(314)", 5)};

    require(level_profile(a, parse_digit_seq("4(0)", 5)).classification == level_kind::empty,
            "4(0) should be empty");

    level_profile_result single = level_profile(a, parse_digit_seq("(0)", 5));
    require(single.classification == level_kind::finite && single.count == 1,
            "(0) should have one preimage");
    auto pts = level_enumerate(u5, a, parse_digit_seq("(0)", 5), 10);
    require(pts.size() == 1 && pts[0].value == decode(u5, parse_digit_seq("(314)", 5)),
            "(0) preimage should be the parameter point");

    std::string block;
    for (int n = 1; n <= 3; ++n) {
        block += "110";
        digit_seq y0 = parse_digit_seq(block + "(0)", 5);
        level_profile_result prof = level_profile(a, y0);
        std::size_t expected = 1;
        for (int k = 0; k < n; ++k) expected *= 4;
        require(prof.classification == level_kind::finite && prof.count == expected,
                "wrong count for n=" + std::to_string(n));
        auto points = level_enumerate(u5, a, y0, 1000);
        require(points.size() == expected, "enumeration size mismatch");
        rational target = decode(u5, y0);
        for (const auto& p : points)
            require(eval(u5, a, p.digits) == target, "preimage does not map to the level");
        for (std::size_t i = 1; i < points.size(); ++i)
            require(points[i - 1].value < points[i].value, "enumeration not strictly sorted");
    }

    require(level_profile(a, parse_digit_seq("(110)", 5)).classification == level_kind::continuum,
            "(110) should be a continuum");
}

// ---- criterion 4 -----------------------------------------------------------

void modulus_and_jump_behavior() {
    rng_t rng(1004);
    std::uniform_int_distribution<int> base_dist(2, 5);
    for (int i = 0; i < 200; ++i) {
        int s = base_dist(rng);
        qstar_system sys = testing::random_system(rng, s);
        s_adic_param a = testing::random_param(rng, s);
        digit_seq x0 = testing::random_unary_seq(rng, s);
        rational f0 = eval(sys, a, x0);
        rational last_modulus = 1;
        for (std::size_t n = 1; n <= 32; n += 3) {
            std::vector<int> shared;
            for (std::size_t k = 1; k < n; ++k) shared.push_back(x0.digit_at(k));
            digit_seq x;
            x.base = s;
            x.pre = shared;
            x.pre.push_back((x0.digit_at(n) + 1) % s);
            x.period = {0, 1 % s};
            rational modulus = continuity_modulus(sys, a, shared);
            require(abs_r(eval(sys, a, normalize(x)) - f0) <= modulus,
                    "modulus bound violated");
            require(modulus <= last_modulus, "modulus not monotone");
            last_modulus = modulus;
        }
        require(last_modulus < 1, "modulus does not shrink by rank 31");
    }

    std::uniform_int_distribution<int> wide_base(3, 6);
    std::uniform_int_distribution<int> blen(1, 4);
    for (int i = 0; i < 200; ++i) {
        int s = wide_base(rng);
        qstar_system sys = testing::random_system(rng, s);
        std::vector<int> base = testing::random_digits(rng, s, blen(rng));
        if (base.back() == 0) base.back() = 1;
        digit_seq ad;
        ad.base = s;
        ad.pre = testing::random_digits(rng, s, i % 3);
        ad.period = testing::random_digits(rng, s, 1 + i % 3);
        ad.period[static_cast<std::size_t>(i) % ad.period.size()] = 1 + (i % (s - 2));
        s_adic_param a{normalize(ad)};
        require(jump(sys, a, base).gap != 0, "interior-digit parameter must jump");
    }

    std::uniform_int_distribution<int> base_dist2(2, 5);
    for (int i = 0; i < 100; ++i) {
        int s = base_dist2(rng);
        qstar_system sys = testing::random_system(rng, s);
        std::vector<int> base = testing::random_digits(rng, s, 1 + i % 4);
        if (base.back() == 0) base.back() = 1;
        require(jump(sys, {constant_seq(s, 0)}, base).gap == 0, "identity must not jump");
        require(jump(sys, {constant_seq(s, s - 1)}, base).gap == 0, "inversor must not jump");
    }
}

// ---- criterion 5 -----------------------------------------------------------

void value_set_suite() {
    rng_t rng(1005);
    for (int i = 0; i < 300; ++i) {
        int s = 3 + (i % 3);
        qstar_system sys = testing::random_system(rng, s);
        s_adic_param a = testing::random_param(rng, s);
        value_set_spec spec = value_set(a);

        digit_seq x = testing::random_canonical_seq(rng, s);
        digit_seq image = apply_digits(a, x);
        for (std::size_t n = 1; n <= 16; ++n) {
            const digit_set& v = spec.vsets.at(n);
            require(std::find(v.begin(), v.end(), image.digit_at(n)) != v.end(),
                    "image digit escapes V_n");
        }

        bool interior = false;
        for (int d : a.digits.period)
            if (d >= 1 && d <= s - 2) interior = true;
        value_set_kind expected = interior ? value_set_kind::cantor_nowhere_dense
                                           : value_set_kind::finite_union_of_intervals;
        require(spec.classification == expected, "classification mismatch");

        rational measure = value_set_measure(sys, spec);
        if (interior) {
            require(measure == 0, "Cantor-type value set must have measure zero");
            std::size_t M = std::max(spec.vsets.pre.size(), sys.prefix.size());
            std::size_t P = lcm_size(spec.vsets.period.size(), sys.period.size());
            bool shrinks = false;
            for (std::size_t k = 1; k <= P; ++k) {
                rational sigma = 0;
                for (int d : spec.vsets.at(M + k)) sigma += sys.q(M + k, d);
                require(sigma <= 1, "column mass above 1");
                if (sigma < 1) shrinks = true;
            }
            require(shrinks, "no strict shrink inside the combined period");
        }
    }
    for (int i = 0; i < 50; ++i) {
        s_adic_param a = testing::random_param(rng, 2);
        require(value_set(a).classification == value_set_kind::full_interval,
                "s=2 must give the full interval");
    }
}

// ---- criterion 6 -----------------------------------------------------------

void dimensions() {
    stochastic_column u3{{rational(1, 3), rational(1, 3), rational(1, 3)}};
    double d = moran_dimension(u3, {0, 1}, 1e-12);
    require(std::abs(d - std::log(2.0) / std::log(3.0)) <= 1e-9, "ln2/ln3 case off");

    stochastic_column g{{rational(1, 2), rational(1, 4), rational(1, 4)}};
    d = moran_dimension(g, {0, 1}, 1e-12);
    require(std::abs(d - std::log2((1.0 + std::sqrt(5.0)) / 2.0)) <= 1e-9,
            "golden-ratio case off");

    require(moran_dimension(u3, {0, 1, 2}, 1e-9) == 1.0, "full alphabet must be exactly 1");
    require(moran_dimension(g, {1}, 1e-9) == 0.0, "singleton must be exactly 0");

    require(std::abs(level_set_dimension(u3, {constant_seq(3, 1)}, constant_seq(3, 1), 1e-12) -
                     std::log(2.0) / std::log(3.0)) <= 1e-9,
            "level-set dimension q0^x+q2^x=1 off");
}

// ---- criterion 7 -----------------------------------------------------------

void brute_force_levels() {
    rng_t rng(1007);
    const std::size_t m = 8;
    for (int i = 0; i < 100; ++i) {
        s_adic_param a = testing::random_param(rng, 3);
        digit_seq y0 = testing::random_canonical_seq(rng, 3);
        level_profile_result prof = level_profile(a, y0);
        digit_seq yc = canonicalize(y0);

        std::size_t matches = 0;
        std::vector<int> word(m, 0);
        for (;;) {
            bool ok = true;
            for (std::size_t n = 1; n <= m && ok; ++n)
                ok = std::abs(a.digits.digit_at(n) - word[n - 1]) == yc.digit_at(n);
            if (ok) ++matches;
            std::size_t j = m;
            bool advanced = false;
            while (j > 0) {
                --j;
                if (++word[j] < 3) {
                    advanced = true;
                    break;
                }
                word[j] = 0;
            }
            if (!advanced) break;
        }
        std::size_t product = 1;
        for (std::size_t n = 1; n <= m; ++n) product *= prof.solsets.at(n).size();
        require(matches == product, "brute-force count disagrees with solution sets");
    }
}

// ---- criterion 8 -----------------------------------------------------------

void function_identities() {
    rng_t rng(1008);
    std::uniform_int_distribution<int> base_dist(2, 6);
    for (int i = 0; i < 1000; ++i) {
        int s = base_dist(rng);
        digit_seq x = testing::random_canonical_seq(rng, s);
        require(inversor(inversor(x)) == x, "inversor is not an involution");
        if (i % 5 == 0) {
            qstar_system sys = testing::random_system(rng, s);
            require(eval(sys, {constant_seq(s, 0)}, x) == decode(sys, x),
                    "f_0 is not the identity");
        }
    }

    int found = 0;
    while (found < 200) {
        int s = 3 + (found % 4);
        s_adic_param a = testing::random_param(rng, s);
        digit_seq bd;
        bd.base = s;
        std::uniform_int_distribution<int> shift(0, (s - 1) / 2);
        for (int d : a.digits.pre) bd.pre.push_back(d % 2 == 0 ? 2 * shift(rng) % s : (2 * shift(rng) + 1) % s);
        for (int d : a.digits.period) bd.period.push_back(d % 2 == 0 ? 2 * shift(rng) % s : (2 * shift(rng) + 1) % s);
        s_adic_param b{normalize(bd)};
        auto c = shared_value_partner(a, b);
        if (!c) continue;
        qstar_system sys = testing::random_system(rng, s);
        require(apply_digits(a, *c) == apply_digits(b, *c), "partner images disagree");
        require(decode(sys, apply_digits(a, *c)) == decode(sys, apply_digits(b, *c)),
                "partner values disagree");
        if (canonicalize(*c) == *c)
            require(eval(sys, a, *c) == eval(sys, b, *c), "partner evals disagree");
        ++found;
    }

    for (int i = 0; i < 200; ++i) {
        int s = 3 + (i % 4);
        std::uniform_int_distribution<int> half(0, (s - 1) / 2);
        digit_seq d;
        d.base = s;
        d.pre = {};
        d.period = {half(rng), half(rng), half(rng)};
        d = normalize(d);
        digit_seq doubled;
        doubled.base = s;
        for (int v : d.period) doubled.period.push_back(2 * v);
        qstar_system sys = testing::random_system(rng, s);
        require(eval(sys, {normalize(doubled)}, d) == decode(sys, d),
                "even-digit parameter does not fix its half point");
    }
}

// ---- criterion 9 -----------------------------------------------------------

int run_cmd(const std::string& cmd) {
    int rc = std::system(cmd.c_str());
    if (rc == -1) throw check_failure{"system() failed"};
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : 128;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void cli_determinism(const std::string& cli) {
    std::string dir = "acceptance_cli_tmp";
    run_cmd("rm -rf " + dir + " && mkdir -p " + dir);

    std::ofstream(dir + "/u5.json") << R"({"s":5,"period":[["1/5","1/5","1/5","1/5","1/5"]]})";
    std::ofstream(dir + "/u3.json") << R"({"s":3,"period":[["1/3","1/3","1/3"]]})";
    std::ofstream(dir + "/mixed.json")
        << R"({"s":2,"prefix":[["1/3","2/3"]],"period":[["1/2","1/2"],["1/4","3/4"]]})";
    std::ofstream(dir + "/bad_sum.json") << R"({"s":3,"period":[["1/3","1/3","3/10"]]})";
    std::ofstream(dir + "/bad_entry.json") << R"({"s":2,"period":[["1","0"]]})";

    std::vector<std::string> script = {
        " validate " + dir + "/u5.json",
        " validate " + dir + "/mixed.json --format json",
        " eval " + dir + "/u5.json --a \"(314)\" --x \"(314)\"",
        " eval " + dir + "/u3.json --a \"(2)\" --x 1/3",
        " graph " + dir + "/u3.json --a \"(1)\" -m 2 --format csv",
        " levelset " + dir + "/u5.json --a \"(314)\" --y0 \"110(0)\" --enumerate --format csv",
        " levelset " + dir + "/u5.json --a \"(314)\" --y0 \"4(0)\"",
        " valueset " + dir + "/u3.json --a \"(1)\" --format json",
        " valueset " + dir + "/u3.json --a \"1(0)\"",
        " dimension " + dir + "/u3.json --v \"01\"",
        " jump " + dir + "/mixed.json --a \"(01)\" --base \"1\"",
    };

    for (int round = 1; round <= 2; ++round) {
        std::string out = dir + "/round" + std::to_string(round) + ".txt";
        run_cmd(": > " + out);
        for (const auto& step : script) {
            int code = run_cmd("\"" + cli + "\"" + step + " >> " + out + " 2>&1");
            require(code == 0, "scenario step failed: " + step);
        }
    }
    require(slurp(dir + "/round1.txt") == slurp(dir + "/round2.txt"),
            "outputs differ between runs");

    require(run_cmd("\"" + cli + "\" validate " + dir + "/bad_sum.json > /dev/null 2>&1") == 2,
            "bad column sum must exit 2");
    require(run_cmd("\"" + cli + "\" validate " + dir + "/bad_entry.json > /dev/null 2>&1") == 2,
            "entry outside (0,1) must exit 2");
    require(run_cmd("\"" + cli + "\" eval " + dir + "/u3.json --a \"(9)\" --x \"(0)\" > /dev/null 2>&1") == 2,
            "digit outside alphabet must exit 2");
    require(run_cmd("\"" + cli + "\" eval " + dir + "/u3.json --a \"(1)\" --x \"1(2\" > /dev/null 2>&1") == 2,
            "malformed digit string must exit 2");
    require(run_cmd("\"" + cli + "\" levelset " + dir + "/u5.json --a \"(314)\" --y0 \"(110)\" --enumerate > /dev/null 2>&1") == 2,
            "continuum enumeration must exit 2");
    require(run_cmd("\"" + cli + "\" graph " + dir + "/u3.json --a \"(1)\" -m 12 --cap 100 > /dev/null 2>&1") == 3,
            "graph over budget must exit 3");

    run_cmd("rm -rf " + dir);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "two representations of binary points decode equally (1000 cases)", two_representation_identity);
    criterion(2, "cylinder tiling and exact length recursion (500 cases)", cylinder_algebra);
    criterion(3, "level-set structure of the s=5 worked example", example1_levels);
    criterion(4, "continuity moduli and jump behavior", modulus_and_jump_behavior);
    criterion(5, "value-set membership, classification, and measure (300 cases)", value_set_suite);
    criterion(6, "self-similar fractal dimensions", dimensions);
    criterion(7, "brute-force rank-8 level counts (100 cases)", brute_force_levels);
    criterion(8, "function identities: f_0, inversor, partners, fixed points", function_identities);
    if (cli.empty()) {
        std::printf("[FAIL] criterion 9: CLI determinism — no CLI path given\n");
        ++g_failures;
    } else {
        criterion(9, "CLI determinism and error codes", [&] { cli_determinism(cli); });
    }

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
