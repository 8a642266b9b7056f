#include "partition_lab/cli.hpp"

#include "partition_lab/euler.hpp"
#include "partition_lab/level_formula.hpp"
#include "partition_lab/partition.hpp"
#include "partition_lab/qbinomial.hpp"
#include "partition_lab/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace plab::cli {

namespace {

struct PublishedValue {
    std::uint32_t n;
    const char* value;
};

// Values quoted with the classical tables of p(n).
constexpr PublishedValue published[] = {
    {10, "42"},
    {50, "204226"},
    {100, "190569292"},
    {200, "3972999029388"},
    {500, "2300165032574323995027"},
    {1000, "24061467864032622473692149727991"},
};

std::optional<std::filesystem::path> cache_location(const RunConfig& cfg)
{
    if (cfg.cache_path)
        return std::filesystem::path(*cfg.cache_path);
    if (const char* env = std::getenv("PARTITION_LAB_CACHE"); env && *env)
        return std::filesystem::path(env);
    return std::nullopt;
}

EvaluationOptions evaluation_options(const RunConfig& cfg)
{
    EvaluationOptions options;
    options.strategy = cfg.strategy == "memoized" ? Strategy::memoized : Strategy::nested;
    options.parallel = cfg.parallel;
    return options;
}

Count count_by_enumeration(std::uint32_t n)
{
    Count total;
    for_each_partition(n, [&](const Partition&) { ++total; });
    return total;
}

template <class Fn>
double time_millis(Fn&& fn)
{
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string join(const std::vector<Partition>& parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty())
            out += ' ';
        out += p.ascending_string();
    }
    return out.empty() ? "-" : out;
}

// ---------------------------------------------------------------- verify

SuiteResult suite_oracle(std::uint32_t max_n)
{
    SuiteResult result{.name = "oracle"};
    std::uint32_t bound = std::min<std::uint32_t>(max_n, Limits{}.enumeration_cap);
    PartitionTable table(bound);
    for (std::uint32_t n = 0; n <= bound && result.passed; ++n) {
        Count enumerated = count_by_enumeration(n);
        Count dp = count_restricted(n, PartitionConstraint::at_most_each_at_most(n, n));
        if (enumerated != table[n] || dp != table[n]) {
            result.passed = false;
            result.counterexample = "n = " + std::to_string(n) + ": enumeration " + enumerated.get_str() +
                                    ", restricted count " + dp.get_str() + ", Euler " + table[n].get_str();
        }
    }
    result.lines.push_back("enumeration = restricted count = Euler recurrence for n <= " + std::to_string(bound));
    return result;
}

SuiteResult suite_theorem(std::uint32_t max_n)
{
    SuiteResult result{.name = "theorem"};
    PartitionTable table(max_n);
    NestedSumTable memo(isqrt(max_n), max_n);
    const std::uint32_t nested_bound = std::min<std::uint32_t>(max_n, 200);
    for (std::uint32_t n = 0; n <= max_n && result.passed; ++n) {
        Count memo_total = n == 0 ? Count(1) : Count(0);
        for (std::uint32_t k = 1; k * k <= n; ++k)
            memo_total += memo.s_level(k, n);
        if (memo_total != table[n]) {
            result.passed = false;
            result.counterexample = "n = " + std::to_string(n) + ": memoized level sum " + memo_total.get_str() +
                                    ", p(n) " + table[n].get_str();
            break;
        }
        if (n > nested_bound)
            continue;
        auto breakdown = p_combinatorial(n);
        if (breakdown.total != table[n]) {
            result.passed = false;
            std::ostringstream os;
            os << "n = " << n << ": level sum " << breakdown.total.get_str() << ", p(n) " << table[n].get_str();
            for (const auto& [k, v] : breakdown.per_level)
                if (v != memo.s_level(k, n))
                    os << "; level " << k << " nested " << v.get_str() << " vs memoized " << memo.s_level(k, n).get_str();
            result.counterexample = os.str();
        }
    }
    result.lines.push_back("sum of levels = p(n) for n <= " + std::to_string(max_n) +
                           " (index-vector enumeration up to " + std::to_string(nested_bound) + ")");
    return result;
}

SuiteResult suite_closed_forms(std::uint32_t max_n, std::span<const ResidueClassForm> s2,
                               std::span<const ResidueClassForm> s3)
{
    SuiteResult result{.name = "closed-forms"};
    std::uint32_t bound = std::max<std::uint32_t>(max_n, 20);
    NestedSumTable memo(3, bound);
    auto check_forms = [&](std::span<const ResidueClassForm> forms) {
        for (const auto& form : forms) {
            std::uint32_t checked = 0, first = 0, last = 0;
            std::string mismatch;
            for (std::uint32_t n = form.shift; n <= bound; ++n) {
                if (!form.contains(n))
                    continue;
                Count closed = form.evaluate(n);
                Count nested = memo.s_level(form.level, n);
                if (closed != nested) {
                    mismatch = "level " + std::to_string(form.level) + " (" + form.class_name() + ") n = " +
                               std::to_string(n) + ": closed form " + closed.get_str() + ", nested sum " +
                               nested.get_str();
                    break;
                }
                if (checked++ == 0)
                    first = n;
                last = n;
            }
            std::ostringstream line;
            if (mismatch.empty()) {
                line << "PASS  " << std::left << std::setw(32) << form.class_name() << " n = " << first << ".."
                     << last << " (" << checked << " values)";
            }
            else {
                line << "FAIL  " << mismatch;
                if (result.passed)
                    result.counterexample = mismatch;
                result.passed = false;
            }
            result.lines.push_back(line.str());
        }
    };
    check_forms(s2);
    check_forms(s3);
    return result;
}

SuiteResult suite_qbinomial(std::uint32_t max_n)
{
    SuiteResult result{.name = "qbinomial"};
    auto fail = [&](std::string what) {
        if (result.passed)
            result.counterexample = std::move(what);
        result.passed = false;
    };
    std::uint32_t shape_bound = std::min<std::uint32_t>(max_n, 20);
    for (std::uint32_t n = 0; n <= shape_bound; ++n)
        for (std::uint32_t k = 0; k <= n; ++k) {
            auto g = qbinom(n, k);
            if (!g.is_palindromic() || g != qbinom(n, n - k) || g.coefficient_sum() != binomial(n, k) ||
                g.degree() != static_cast<long>(k * (n - k)))
                fail("shape of [" + std::to_string(n) + " " + std::to_string(k) + "]");
        }
    result.lines.push_back("palindromic, symmetric, q=1 sums for n <= " + std::to_string(shape_bound));

    std::uint32_t pascal_bound = std::min<std::uint32_t>(max_n, 15);
    for (std::uint32_t n = 1; n <= pascal_bound; ++n)
        for (std::uint32_t k = 1; k <= n; ++k) {
            auto r = verify_pascal(n, k);
            if (!r.first_holds || !r.second_holds || r.first_exponent != k)
                fail("Pascal identity at n = " + std::to_string(n) + ", k = " + std::to_string(k));
        }
    result.lines.push_back("both Pascal identities for n <= " + std::to_string(pascal_bound) +
                           " (first identity needs exponent k)");

    std::uint32_t finite_bound = std::min<std::uint32_t>(max_n, 12);
    for (std::uint32_t n = 0; n <= finite_bound; ++n)
        if (auto r = verify_finite_qbt(n); !r.equal)
            fail("finite q-binomial theorem at n = " + std::to_string(n) + ": " + r.first_difference);
    result.lines.push_back("finite q-binomial theorem for n <= " + std::to_string(finite_bound));

    auto infinite = verify_infinite_qbt_truncated(8, 8, 8);
    if (!infinite.standard.equal)
        fail("infinite q-binomial theorem: " + infinite.standard.first_difference);
    result.lines.push_back("infinite q-binomial theorem on " + infinite.standard.region +
                           (infinite.product_from_one.equal ? "" : "; product started at k = 1 does not match"));

    auto jacobi = verify_jacobi_truncated(5, 10);
    if (!jacobi.equal)
        fail("Jacobi triple product: " + jacobi.first_difference);
    result.lines.push_back("Jacobi triple product, J = 5, " + jacobi.region);

    std::uint32_t interp_bound = std::min<std::uint32_t>(max_n, 12);
    for (std::uint32_t total = 0; total <= interp_bound; ++total)
        for (std::uint32_t n = 0; n <= total; ++n) {
            std::uint32_t m = total - n;
            for (std::uint32_t r = 0; r <= n * m + 1; ++r)
                if (auto rep = interpretation_check(n, m, r); !rep.consistent)
                    fail("interpretation at n = " + std::to_string(n) + ", m = " + std::to_string(m) +
                         ", r = " + std::to_string(r));
        }
    result.lines.push_back("new and classical coefficient readings for n + m <= " + std::to_string(interp_bound));

    std::uint32_t conj_bound = std::min<std::uint32_t>(max_n, 10);
    for (std::uint32_t N = 0; N <= conj_bound; ++N)
        for (std::uint32_t K = 0; K <= N; ++K)
            for (std::uint32_t r = 0; r <= K * (N - K); ++r) {
                auto lhs = gaussian_witnesses(N, K, r);
                auto rhs = gaussian_witnesses(N, N - K, r);
                std::vector<Partition> image;
                for (const auto& p : lhs)
                    image.push_back(conjugate(p));
                std::sort(image.begin(), image.end());
                std::sort(rhs.begin(), rhs.end());
                if (image != rhs)
                    fail("conjugate witnesses of [" + std::to_string(N) + " " + std::to_string(K) + "] at q^" +
                         std::to_string(r));
            }
    result.lines.push_back("witnesses of [N K] and [N N-K] conjugate for N <= " + std::to_string(conj_bound));
    return result;
}

SuiteResult suite_grid(std::uint32_t max_n)
{
    SuiteResult result{.name = "grid"};
    std::uint32_t bound = std::min<std::uint32_t>(max_n, 60);
    for (std::uint32_t N = 1; N <= bound && result.passed; ++N) {
        auto r = grid_identity(N);
        if (!r.equal) {
            result.passed = false;
            result.counterexample =
                "N = " + std::to_string(N) + ": grid " + r.grid_sum.get_str() + ", p(N) " + r.expected.get_str();
        }
    }
    result.lines.push_back("grid sum = p(N) for N <= " + std::to_string(bound));
    return result;
}

SuiteResult suite_duality(std::uint32_t max_n)
{
    SuiteResult result{.name = "duality"};
    std::uint32_t bound = std::min<std::uint32_t>(max_n, 40);
    for (std::uint32_t N = 1; N <= bound && result.passed; ++N) {
        Count signature_total;
        for (std::uint32_t a = 1; a <= N && result.passed; ++a)
            for (std::uint32_t b = 1; a + b <= N + 1 && result.passed; ++b) {
                auto r = duality_check(N, a, b);
                signature_total += r.forward;
                if (!r.counts_equal || !r.bijection) {
                    result.passed = false;
                    result.counterexample = "N = " + std::to_string(N) + ", a = " + std::to_string(a) +
                                            ", b = " + std::to_string(b);
                }
            }
        if (result.passed && signature_total != PartitionTable(N)[N]) {
            result.passed = false;
            result.counterexample = "N = " + std::to_string(N) + ": signature counts do not sum to p(N)";
        }
    }
    result.lines.push_back("(parts, greatest) duality and conjugation bijection for N <= " + std::to_string(bound));
    return result;
}

SuiteResult suite_durfee(std::uint32_t max_n)
{
    SuiteResult result{.name = "durfee", .gating = false};
    std::uint32_t bound = std::min<std::uint32_t>(max_n, 40);
    NestedSumTable memo(isqrt(std::max<std::uint32_t>(bound, 1)), std::max<std::uint32_t>(bound, 1));
    for (std::uint32_t n = 1; n <= bound && result.passed; ++n) {
        std::vector<Count> census(isqrt(n) + 1);
        for_each_partition(n, [&](const Partition& p) { ++census[durfee_side(p)]; });
        for (std::uint32_t k = 1; k <= isqrt(n); ++k)
            if (census[k] != memo.s_level(k, n)) {
                result.passed = false;
                result.counterexample = "n = " + std::to_string(n) + ", level " + std::to_string(k) + ": S_k " +
                                        memo.s_level(k, n).get_str() + ", Durfee side k " + census[k].get_str();
                break;
            }
    }
    result.lines.push_back(std::string("hypothesis S_k(n) = #{Durfee side k} for n <= ") + std::to_string(bound) +
                           (result.passed ? ": holds" : ": fails"));
    return result;
}

// ---------------------------------------------------------------- table

void write_table_text(std::ostream& out, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows)
            width[c] = std::max(width[c], row[c].size());
    }
    auto emit = [&](const std::vector<std::string>& row) {
        std::ostringstream line;
        for (std::size_t c = 0; c < row.size(); ++c)
            line << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
        std::string text = line.str();
        text.erase(text.find_last_not_of(' ') + 1);
        out << text << '\n';
    };
    emit(header);
    for (const auto& row : rows)
        emit(row);
}

} // namespace

std::vector<std::string> suite_names()
{
    return {"oracle", "theorem", "closed-forms", "qbinomial", "grid", "duality", "durfee"};
}

std::vector<SuiteResult> run_suites(const VerifyInputs& inputs)
{
    std::vector<SuiteResult> results;
    auto wanted = [&](std::string_view name) { return inputs.suite == "all" || inputs.suite == name; };
    if (wanted("oracle"))
        results.push_back(suite_oracle(inputs.max_n));
    if (wanted("theorem"))
        results.push_back(suite_theorem(inputs.max_n));
    if (wanted("closed-forms"))
        results.push_back(suite_closed_forms(inputs.max_n, inputs.s2, inputs.s3));
    if (wanted("qbinomial"))
        results.push_back(suite_qbinomial(inputs.max_n));
    if (wanted("grid"))
        results.push_back(suite_grid(inputs.max_n));
    if (wanted("duality"))
        results.push_back(suite_duality(inputs.max_n));
    if (wanted("durfee"))
        results.push_back(suite_durfee(inputs.max_n));
    return results;
}

int run_verify(const VerifyInputs& inputs, std::ostream& out, std::ostream& err)
{
    auto names = suite_names();
    if (inputs.suite != "all" && std::find(names.begin(), names.end(), inputs.suite) == names.end()) {
        err << "unknown suite '" << inputs.suite << "'\n";
        return usage_error;
    }
    bool all_passed = true;
    for (const auto& suite : run_suites(inputs)) {
        const char* tag = suite.passed ? "PASS" : (suite.gating ? "FAIL" : "INFO");
        out << tag << ' ' << suite.name;
        if (!suite.passed)
            out << ": " << suite.counterexample;
        out << '\n';
        for (const auto& line : suite.lines)
            out << "    " << line << '\n';
        if (suite.gating && !suite.passed)
            all_passed = false;
    }
    return all_passed ? ok : verification_failed;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    VerifyInputs inputs;
    inputs.max_n = cfg.max_n;
    inputs.suite = cfg.suite;
    return run_verify(inputs, out, err);
}

int run_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.format == "csv") {
        err << "compute supports --format text or json\n";
        return usage_error;
    }
    const bool json = cfg.format == "json";
    const std::uint32_t n = cfg.n;

    if (cfg.method == "estimate") {
        if (n == 0) {
            err << "the estimate method needs n >= 1\n";
            return usage_error;
        }
        auto e = hr_leading_estimate(n);
        if (json) {
            out << nlohmann::json{{"n", n}, {"method", "estimate"}, {"lambda_n", e.lambda_n},
                                  {"estimate", e.estimate}, {"rounded", e.rounded}}
                       .dump()
                << '\n';
        }
        else {
            out << "p(" << n << ") ~ " << std::setprecision(17) << e.estimate << " (rounded " << e.rounded
                << ", lambda_n = " << e.lambda_n << ")\n";
        }
        return ok;
    }

    // exact methods
    auto cache = cache_location(cfg);
    std::optional<PartitionTable> table;
    auto euler_value = [&]() -> Count {
        if (!table) {
            if (cache && std::filesystem::exists(*cache))
                table = load_table(*cache);
            else
                table = PartitionTable(0);
        }
        std::uint32_t before = table->max_n();
        Count value = p_euler(n, *table);
        if (cache && (table->max_n() != before || !std::filesystem::exists(*cache)))
            save_table(*table, *cache);
        return value;
    };
    const bool enumerable = n <= Limits{}.enumeration_cap;

    try {
        Count value;
        std::optional<LevelBreakdown> breakdown;
        if (cfg.method == "bruteforce") {
            value = count_by_enumeration(n);
        }
        else if (cfg.method == "euler") {
            value = euler_value();
        }
        else {
            breakdown = p_combinatorial(n, evaluation_options(cfg));
            value = breakdown->total;
        }

        if (cfg.check) {
            std::vector<std::pair<std::string, Count>> results;
            results.emplace_back("euler", euler_value());
            if (!breakdown)
                breakdown = p_combinatorial(n, evaluation_options(cfg));
            results.emplace_back("combinatorial", breakdown->total);
            if (enumerable)
                results.emplace_back("bruteforce", count_by_enumeration(n));
            bool agree = std::all_of(results.begin(), results.end(), [&](const auto& r) { return r.second == value; });
            if (!agree) {
                err << "methods disagree for n = " << n << ":";
                for (const auto& [name, v] : results)
                    err << ' ' << name << '=' << v.get_str();
                err << '\n';
                return verification_failed;
            }
            if (cfg.method != "combinatorial")
                breakdown.reset();
        }

        if (json) {
            if (breakdown)
                out << to_json(*breakdown).dump() << '\n';
            else
                out << nlohmann::json{{"n", n}, {"method", cfg.method}, {"value", to_decimal(value)}}.dump() << '\n';
        }
        else {
            out << "p(" << n << ") = " << value.get_str() << (breakdown && breakdown->by_convention ? " (by convention)" : "")
                << '\n';
            if (breakdown)
                for (const auto& [k, v] : breakdown->per_level)
                    out << "  S_" << k << '(' << n << ") = " << v.get_str() << '\n';
        }
    }
    catch (const CapExceeded& e) {
        err << e.what() << '\n';
        return usage_error;
    }
    catch (const CacheParseError& e) {
        err << e.what() << '\n';
        return usage_error;
    }
    return ok;
}

int run_table(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.max_n > 10000) {
        err << "table is limited to --max-n <= 10000\n";
        return usage_error;
    }
    const std::uint32_t max_n = cfg.max_n;
    const std::uint32_t top = isqrt(max_n);
    NestedSumTable levels(std::max<std::uint32_t>(top, 2), max_n);
    PartitionTable table(max_n);

    bool sublevels = cfg.sublevels == "on" || (cfg.sublevels == "auto" && max_n <= 24);
    std::vector<LevelIndexVector> columns;
    if (sublevels)
        for (std::uint32_t k = 3; k <= top; ++k) {
            auto more = index_vectors(k, max_n);
            columns.insert(columns.end(), more.begin(), more.end());
        }

    std::vector<std::string> header{"n"};
    for (std::uint32_t k = 1; k <= top; ++k)
        header.push_back("S_" + std::to_string(k));
    header.push_back("p(n)");
    for (const auto& v : columns)
        header.push_back(v.label());

    const bool text = cfg.format == "text";
    std::vector<std::vector<std::string>> rows;
    nlohmann::json json_rows = nlohmann::json::array();
    for (std::uint32_t n = 1; n <= max_n; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        nlohmann::json json_levels = nlohmann::json::object(), json_sub = nlohmann::json::object();
        Count total;
        for (std::uint32_t k = 1; k <= top; ++k) {
            Count value = levels.s_level(k, n);
            total += value;
            bool started = std::uint64_t{k} * k <= n;
            row.push_back(text && !started ? "" : value.get_str());
            if (started)
                json_levels[std::to_string(k)] = value.get_str();
        }
        if (total != table[n]) {
            err << "level sum " << total.get_str() << " differs from p(" << n << ") = " << table[n].get_str() << '\n';
            return verification_failed;
        }
        row.push_back(table[n].get_str());
        for (const auto& v : columns) {
            Count value = s_inner(v.level, n, v);
            row.push_back(text && value == 0 ? "" : value.get_str());
            json_sub[v.label()] = value.get_str();
        }
        if (cfg.format == "json") {
            nlohmann::json r{{"n", n}, {"levels", json_levels}, {"p", table[n].get_str()}};
            if (sublevels)
                r["sublevels"] = json_sub;
            json_rows.push_back(std::move(r));
        }
        rows.push_back(std::move(row));
    }

    if (cfg.format == "json") {
        out << json_rows.dump() << '\n';
    }
    else if (cfg.format == "csv") {
        auto emit = [&](const std::vector<std::string>& row) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << row[c];
            out << '\n';
        };
        emit(header);
        for (const auto& row : rows)
            emit(row);
    }
    else {
        write_table_text(out, header, rows);
    }
    return ok;
}

int run_qbinom(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.format == "csv") {
        err << "qbinom supports --format text or json\n";
        return usage_error;
    }
    const std::uint32_t N = cfg.n, K = cfg.k;
    auto g = qbinom(N, K);
    std::vector<Partition> new_witnesses, classical_witnesses;
    if (cfg.witness && K <= N) {
        try {
            new_witnesses = gaussian_witnesses(N, K, *cfg.witness);
            classical_witnesses =
                enumerate_restricted(*cfg.witness, PartitionConstraint::at_most_each_at_most(N - K, K));
        }
        catch (const CapExceeded& e) {
            err << e.what() << '\n';
            return usage_error;
        }
    }

    if (cfg.format == "json") {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : g.coeffs())
            coeffs.push_back(c.get_str());
        nlohmann::json j{{"n", N}, {"k", K}, {"coefficients", coeffs}};
        if (cfg.witness) {
            auto strings = [](const std::vector<Partition>& ps) {
                nlohmann::json a = nlohmann::json::array();
                for (const auto& p : ps)
                    a.push_back(p.ascending_string());
                return a;
            };
            j["witness"] = {{"r", *cfg.witness},
                            {"coefficient", g.coefficient(*cfg.witness).get_str()},
                            {"new", strings(new_witnesses)},
                            {"classical", strings(classical_witnesses)}};
        }
        out << j.dump() << '\n';
        return ok;
    }

    out << '[' << N << ' ' << K << "] = " << g.to_string() << '\n';
    out << "coefficients:";
    for (const auto& c : g.coeffs())
        out << ' ' << c.get_str();
    out << '\n';
    if (cfg.witness) {
        std::uint32_t r = *cfg.witness;
        out << "q^" << r << " coefficient: " << g.coefficient(r).get_str() << '\n';
        if (K <= N) {
            out << "  " << N + 1 + r << " into " << K + 1 << " parts, greatest " << N - K + 1 << ": "
                << join(new_witnesses) << '\n';
            out << "  " << r << " into at most " << N - K << " parts, each <= " << K << ": "
                << join(classical_witnesses) << '\n';
        }
    }
    return ok;
}

int run_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<TimingRecord> records;
    const std::uint32_t max_n = cfg.max_n;

    std::optional<PartitionTable> table;
    records.push_back({"euler_table", max_n, time_millis([&] { table = build_table(max_n); })});
    for (const auto& ref : published)
        if (ref.n <= max_n && (*table)[ref.n] != Count(ref.value)) {
            err << "Euler table disagrees with the published p(" << ref.n << ")\n";
            return verification_failed;
        }

    LevelBreakdown memoized;
    EvaluationOptions memo_options{Strategy::memoized};
    records.push_back(
        {"combinatorial_memoized", max_n, time_millis([&] { memoized = p_combinatorial(max_n, memo_options); })});
    if (memoized.total != (*table)[max_n]) {
        err << "memoized level sum disagrees with p(" << max_n << ")\n";
        return verification_failed;
    }

    if (max_n <= cfg.nested_limit) {
        LevelBreakdown sequential, parallel;
        records.push_back(
            {"combinatorial_nested", max_n, time_millis([&] { sequential = p_combinatorial(max_n); })});
        if (sequential != memoized) {
            err << "nested and memoized level sums disagree at n = " << max_n << '\n';
            return verification_failed;
        }
        if (cfg.parallel) {
            EvaluationOptions par{Strategy::nested, true};
            records.push_back({"combinatorial_nested_parallel", max_n,
                               time_millis([&] { parallel = p_combinatorial(max_n, par); })});
            if (parallel != sequential) {
                err << "parallel evaluation is not identical to sequential at n = " << max_n << '\n';
                return verification_failed;
            }
        }
    }
    else {
        err << "skipping index-vector enumeration above n = " << cfg.nested_limit << '\n';
    }

    records.push_back({"qbinom", 2 * cfg.max_k, time_millis([&] { (void)qbinom(2 * cfg.max_k, cfg.max_k); })});

    if (cfg.format == "json") {
        nlohmann::json array = nlohmann::json::array();
        for (const auto& r : records)
            array.push_back(to_json(r));
        out << array.dump() << '\n';
    }
    else {
        for (const auto& r : records)
            out << std::left << std::setw(32) << r.task << std::right << std::setw(8) << r.n << std::setw(14)
                << std::fixed << std::setprecision(3) << r.millis << " ms\n";
    }
    return ok;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exact partition function toolkit", "partition_lab"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "compute p(n) by one method");
    compute->add_option("--n", cfg.n, "argument n")->required()->check(CLI::NonNegativeNumber);
    compute->add_option("--method", cfg.method, "bruteforce | euler | combinatorial | estimate")
        ->check(CLI::IsMember({"bruteforce", "euler", "combinatorial", "estimate"}));
    compute->add_option("--strategy", cfg.strategy, "nested | memoized (combinatorial method)")
        ->check(CLI::IsMember({"nested", "memoized"}));
    compute->add_flag("--check", cfg.check, "cross-check every exact method, exit 1 on disagreement");
    compute->add_flag("--parallel", cfg.parallel, "evaluate independent index vectors concurrently");
    compute->add_option("--cache", cfg.cache_path, "p(n) cache file (overrides PARTITION_LAB_CACHE)");
    compute->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* table = app.add_subcommand("table", "levels S_k(n) and p(n) for n = 1..max-n");
    table->add_option("--max-n", cfg.max_n)->required()->check(CLI::NonNegativeNumber);
    table->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "csv"}));
    table->add_option("--sublevels", cfg.sublevels, "auto | on | off")->check(CLI::IsMember({"auto", "on", "off"}));

    auto* verify = app.add_subcommand("verify", "run the identity checkers");
    verify->add_option("--max-n", cfg.max_n)->check(CLI::NonNegativeNumber);
    auto* suite_positional = verify->add_option("name", cfg.suite, "suite name (default: all)");
    verify->add_option("--suite", cfg.suite, "suite name (default: all)")->excludes(suite_positional);

    auto* qb = app.add_subcommand("qbinom", "Gaussian polynomial [n k]");
    qb->add_option("--n", cfg.n)->required()->check(CLI::NonNegativeNumber);
    qb->add_option("--k", cfg.k)->required()->check(CLI::NonNegativeNumber);
    qb->add_option("--witness", cfg.witness, "list partitions behind the q^R coefficient");
    qb->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* bench = app.add_subcommand("bench", "timing of every p(n) route");
    bench->add_option("--max-n", cfg.max_n)->check(CLI::NonNegativeNumber);
    bench->add_option("--max-k", cfg.max_k)->check(CLI::NonNegativeNumber);
    bench->add_option("--nested-limit", cfg.nested_limit, "largest n for index-vector enumeration");
    bench->add_flag("--parallel", cfg.parallel);
    bench->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "csv"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage_error;
    }

    try {
        if (compute->parsed())
            return run_compute(cfg, out, err);
        if (table->parsed())
            return run_table(cfg, out, err);
        if (verify->parsed())
            return run_verify(cfg, out, err);
        if (qb->parsed())
            return run_qbinom(cfg, out, err);
        return run_bench(cfg, out, err);
    }
    catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return usage_error;
    }
}

} // namespace plab::cli
