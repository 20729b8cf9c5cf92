#include "wittrep/report.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

namespace wittrep {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult run_check(const std::string& name,
                      const std::function<std::vector<std::string>()>& fn) {
    CheckResult r;
    r.name = name;
    auto t0 = Clock::now();
    try {
        std::vector<std::string> failures = fn();
        if (!failures.empty()) {
            r.status = CheckStatus::Fail;
            std::string d;
            for (const auto& f : failures) {
                if (!d.empty()) d += "; ";
                d += f;
            }
            r.detail = d;
        }
    } catch (const std::exception& e) {
        r.status = CheckStatus::Fail;
        r.detail = e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

CheckResult skipped(const std::string& name, const std::string& why) {
    CheckResult r;
    r.name = name;
    r.status = CheckStatus::Skipped;
    r.detail = why;
    return r;
}

std::vector<std::string> structure_axiom_failures(std::uint64_t p) {
    std::vector<std::string> failures;
    for (const AxiomCheck& c : verify_structure(p))
        if (!c.passed) failures.push_back(c.name + ": " + c.detail);
    return failures;
}

std::vector<std::string> constructor_failures(std::uint64_t p) {
    // Validation happens inside the constructors; any violation throws.
    std::vector<std::string> failures;
    natural_module(p);
    adjoint_module(p);
    tensor_square_natural(p);
    for (FpScalar lam = 0; lam < p; ++lam) {
        verma_module(p, lam);
        auto [mod, label] = simple_module(p, lam);
        if (mod.dim != label.dim)
            failures.push_back("L(" + std::to_string(lam) + ") dimension mismatch");
        std::vector<Subspace> w = weight_decomposition(mod);
        std::size_t total = 0;
        for (const Subspace& s : w) total += s.dim();
        if (total != mod.dim)
            failures.push_back("L(" + std::to_string(lam) +
                               ") weight decomposition incomplete");
    }
    return failures;
}

std::vector<std::string> linalg_property_failures(std::uint64_t p) {
    std::vector<std::string> failures;
    std::mt19937 rng(20240811u + static_cast<unsigned>(p));
    auto random_matrix = [&](std::size_t r, std::size_t c) {
        FpMatrix m(r, c, p);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.at(i, j) = rng() % p;
        return m;
    };
    auto random_invertible = [&](std::size_t n) {
        for (;;) {
            FpMatrix t = random_matrix(n, n);
            if (rref(t).rank == n) return t;
        }
    };
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        FpMatrix m = random_matrix(rows, cols);
        RrefResult r = rref(m);
        if (rref(r.reduced).reduced != r.reduced)
            failures.push_back("rref not idempotent");
        if (r.rank + kernel(m).dim() != cols)
            failures.push_back("rank-nullity violated");
        Subspace rs = Subspace::from_matrix(m);
        FpMatrix t = random_invertible(rows);
        if (Subspace::from_matrix(t * m) != rs)
            failures.push_back("row space not canonical under row operations");
    }
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng() % 10;
        Subspace a = Subspace::from_matrix(random_matrix(1 + rng() % n, n));
        Subspace b = Subspace::from_matrix(random_matrix(1 + rng() % n, n));
        if (subspace_sum(a, b).dim() + subspace_intersect(a, b).dim() !=
            a.dim() + b.dim())
            failures.push_back("modular dimension formula violated");
        if (subspace_sum(a, a) != a)
            failures.push_back("subspace sum not idempotent");
        auto [q, section] = quotient_map(n, a);
        if (q * section != FpMatrix::identity(n - a.dim(), p))
            failures.push_back("quotient section is not a right inverse");
    }
    return failures;
}

} // namespace

VerificationReport run_verify(std::uint64_t p) {
    VerificationReport rep;
    rep.prime = p;
    require_valid_prime(p);

    rep.checks.push_back(run_check("structure_axioms",
                                   [&] { return structure_axiom_failures(p); }));
    rep.checks.push_back(run_check("module_constructors",
                                   [&] { return constructor_failures(p); }));

    rep.checks.push_back(run_check("natural_equals_verma_top", [&] {
        std::vector<std::string> f;
        GradedGModule a1 = natural_module(p);
        GradedGModule z = verma_module(p, p - 1);
        if (a1.action != z.action)
            f.push_back("A(1) and Z(p-1) action matrices differ");
        return f;
    }));

    rep.checks.push_back(run_check("adjoint_identification", [&] {
        std::vector<std::string> f;
        SimpleLabel got = identify_simple(adjoint_module(p));
        if (got != make_simple_label(p, p - 2))
            f.push_back("adjoint identified as L(" + std::to_string(got.lambda) +
                        "), expected L(" + std::to_string(p - 2) + ")");
        return f;
    }));

    std::optional<TensorDecomposition> pipe;
    rep.checks.push_back(run_check("tensor_pipeline_build", [&] {
        pipe = build_pipeline(p);
        return std::vector<std::string>{};
    }));

    if (!pipe) {
        for (const char* name :
             {"weight_table", "injectivity_lemma", "surjectivity_lemma",
              "graded_dims_lemma", "main_theorem", "grothendieck_identities"})
            rep.checks.push_back(skipped(name, "pipeline build failed"));
        return rep;
    }

    rep.checks.push_back(run_check("weight_table", [&] {
        WeightTable t = weight_table(*pipe);
        rep.tables.push_back(t);
        std::vector<std::string> f;
        if (!t.matches)
            for (std::size_t r = 0; r < t.row_names.size(); ++r)
                if (t.actual[r] != t.expected[r])
                    f.push_back("row " + t.row_names[r] + " mismatches");
        return f;
    }));

    rep.checks.push_back(run_check("injectivity_lemma",
                                   [&] { return injectivity_failures(pipe->A2); }));
    rep.checks.push_back(run_check("surjectivity_lemma",
                                   [&] { return surjectivity_failures(*pipe); }));
    rep.checks.push_back(run_check("graded_dims_lemma",
                                   [&] { return graded_dim_failures(*pipe); }));
    if (p == 5)
        rep.checks.push_back(run_check("degree6_exception_p5",
                                       [&] { return p5_degree6_failures(*pipe); }));

    rep.checks.push_back(run_check("main_theorem", [&] {
        MainTheoremResult r = verify_main_theorem(*pipe);
        rep.series.push_back({"AsPlus", r.sym_chain_report});
        rep.series.push_back({"AaPlus", r.alt_chain_report});
        return r.failures;
    }));

    rep.checks.push_back(run_check("grothendieck_identities", [&] {
        GrothendieckResult r = grothendieck_checks(*pipe);
        return r.failures;
    }));

    rep.series.insert(rep.series.begin(), run_series(p, "A1"));
    return rep;
}

VerificationReport run_selftest(std::uint64_t p) {
    VerificationReport rep;
    rep.prime = p;
    require_valid_prime(p);
    rep.checks.push_back(run_check("structure_axioms",
                                   [&] { return structure_axiom_failures(p); }));
    rep.checks.push_back(run_check("module_constructors",
                                   [&] { return constructor_failures(p); }));
    rep.checks.push_back(run_check("linear_algebra_properties",
                                   [&] { return linalg_property_failures(p); }));
    return rep;
}

SeriesLine run_series(std::uint64_t p, const std::string& selector) {
    require_valid_prime(p);
    GradedGModule m;
    if (selector == "A1") {
        m = natural_module(p);
    } else if (selector == "A2") {
        m = tensor_square_natural(p);
    } else if (selector == "AsPlus" || selector == "AaPlus") {
        TensorDecomposition d = build_pipeline(p);
        m = (selector == "AsPlus") ? d.AsPlus : d.AaPlus;
    } else if (selector == "LxL") {
        GradedGModule l = simple_module(p, p - 1).first;
        m = tensor_product(l, l);
    } else if (selector == "adjoint") {
        m = adjoint_module(p);
    } else if (selector.rfind("Z:", 0) == 0 || selector.rfind("L:", 0) == 0) {
        FpScalar lam = std::stoull(selector.substr(2));
        if (lam >= p)
            throw std::invalid_argument("lambda out of range in selector '" +
                                        selector + "'");
        m = (selector[0] == 'Z') ? verma_module(p, lam)
                                 : simple_module(p, lam).first;
    } else {
        throw std::invalid_argument("unknown module selector '" + selector + "'");
    }
    return {selector, composition_series(m)};
}

std::string format_series(const SeriesLine& line, std::uint64_t p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < line.report.chain.size(); ++i) {
        if (i) os << " ⊃ ";
        os << line.report.chain[i];
    }
    os << "; factors ";
    for (std::size_t i = 0; i < line.report.factors.size(); ++i) {
        if (i) os << ",";
        os << "L^-(" << line.report.factors[i].lowest_weight << ")";
    }
    os << " = ";
    for (std::size_t i = 0; i < line.report.factors.size(); ++i) {
        if (i) os << ",";
        os << "L(" << line.report.factors[i].lambda << ")";
    }
    (void)p;
    return os.str();
}

namespace {

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        default: return "SKIP";
    }
}

} // namespace

std::string render_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "prime " << r.prime << ": "
       << (r.all_passed() ? "all checks passed" : "CHECKS FAILED") << "\n";
    for (const CheckResult& c : r.checks) {
        os << "  [" << status_str(c.status) << "] " << c.name;
        os << " (" << static_cast<long>(c.millis * 10) / 10.0 << " ms)";
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    for (const WeightTable& t : r.tables) {
        os << "  weight table (dims per weight 0.." << r.prime - 1 << "):\n";
        for (std::size_t i = 0; i < t.row_names.size(); ++i) {
            os << "    " << t.row_names[i] << ":";
            for (std::size_t d : t.actual[i]) os << " " << d;
            os << "\n";
        }
    }
    for (const SeriesLine& s : r.series)
        os << "  series " << s.module_name << ": " << format_series(s, r.prime)
           << "\n";
    return os.str();
}

std::string render_markdown(const VerificationReport& r) {
    std::ostringstream os;
    os << "## Prime " << r.prime << " — "
       << (r.all_passed() ? "all checks passed" : "**CHECKS FAILED**") << "\n\n";
    os << "| check | status | detail |\n|---|---|---|\n";
    for (const CheckResult& c : r.checks)
        os << "| " << c.name << " | " << status_str(c.status) << " | "
           << (c.detail.empty() ? "-" : c.detail) << " |\n";
    for (const WeightTable& t : r.tables) {
        os << "\n### Weight table\n\n| module |";
        for (std::uint64_t w = 0; w < r.prime; ++w) os << " " << w << " |";
        os << "\n|---|";
        for (std::uint64_t w = 0; w < r.prime; ++w) os << "---|";
        os << "\n";
        for (std::size_t i = 0; i < t.row_names.size(); ++i) {
            os << "| " << t.row_names[i] << " |";
            for (std::size_t d : t.actual[i]) os << " " << d << " |";
            os << "\n";
        }
    }
    if (!r.series.empty()) {
        os << "\n### Composition series\n\n";
        for (const SeriesLine& s : r.series)
            os << "- `" << s.module_name << "`: " << format_series(s, r.prime)
               << "\n";
    }
    return os.str();
}

std::string render_json(const VerificationReport& r) {
    // Timings are deliberately excluded: two runs on the same input must be
    // byte-identical.
    nlohmann::json j;
    j["prime"] = r.prime;
    j["status"] = r.all_passed() ? "pass" : "fail";
    j["checks"] = nlohmann::json::array();
    for (const CheckResult& c : r.checks)
        j["checks"].push_back({{"name", c.name},
                               {"status", status_str(c.status)},
                               {"detail", c.detail}});
    j["tables"] = nlohmann::json::object();
    for (const WeightTable& t : r.tables) {
        nlohmann::json rows = nlohmann::json::object();
        for (std::size_t i = 0; i < t.row_names.size(); ++i)
            rows[t.row_names[i]] = t.actual[i];
        j["tables"]["weights"] = rows;
    }
    j["series"] = nlohmann::json::array();
    for (const SeriesLine& s : r.series) {
        nlohmann::json f = nlohmann::json::array();
        for (const SimpleLabel& l : s.report.factors)
            f.push_back({{"lambda", l.lambda},
                         {"lowest_weight", l.lowest_weight},
                         {"dim", l.dim}});
        j["series"].push_back({{"module", s.module_name},
                               {"chain", s.report.chain},
                               {"factors", f}});
    }
    return j.dump(2) + "\n";
}

} // namespace wittrep
