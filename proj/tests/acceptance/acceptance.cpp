// Acceptance suite: runs every verification criterion at its stated sample
// size and tolerance, prints one PASS/FAIL line per criterion, and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "pgfock/partitions.hpp"
#include "pgfock/rational.hpp"
#include "pgfock/suites.hpp"

using namespace pgfock;

namespace {

int failures = 0;

void report_line(int number, const std::string& label, bool pass, double seconds,
                 const std::string& detail) {
    std::printf("[%2d] %s  %-34s (%6.1f s)%s%s\n", number, pass ? "PASS" : "FAIL", label.c_str(),
                seconds, detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& label, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        detail = fn(pass);
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_line(number, label, pass, secs, detail);
}

std::string suite_detail(const Report& rep) {
    int passed = 0;
    std::string first_fail;
    for (const IdentityResult& id : rep.identities) {
        if (id.pass)
            ++passed;
        else if (first_fail.empty())
            first_fail = id.name;
    }
    std::string d = std::to_string(passed) + "/" + std::to_string(rep.identities.size()) +
                    " identities";
    if (!first_fail.empty()) d += ", first failure: " + first_fail;
    return d;
}

// Every Monte Carlo identity is a 3-standard-error test (about 0.3% false
// alarms per identity by construction), so the acceptance run pins a master
// seed; the run is bit-reproducible for a fixed build.
ExperimentSpec base_spec(const std::string& suite) {
    ExperimentSpec spec;
    spec.suite = suite;
    spec.seed = 20260812;
    spec.samples = 100000;
    spec.threads = 0;
    return spec;
}

} // namespace

int main() {
    std::printf("pgfock acceptance criteria\n");

    criterion(1, "laplace functional agreement", [](bool& pass) {
        ExperimentSpec spec = base_spec("laplace-check");
        spec.window = Window(0.0, 2.0);
        spec.epsilon = 1e-3;
        const Report rep = run_suite(spec);
        pass = rep.pass();
        return suite_detail(rep);
    });

    criterion(2, "mecke identity", [](bool& pass) {
        ExperimentSpec spec = base_spec("mecke");
        spec.window = Window(0.0, 1.5);
        const Report rep = run_suite(spec);
        pass = rep.pass();
        return suite_detail(rep);
    });

    criterion(3, "charlier orthogonality grid", [](bool& pass) {
        ExperimentSpec spec = base_spec("charlier-orth");
        spec.n = 3;
        const Report rep = run_suite(spec);
        pass = rep.pass();
        return suite_detail(rep);
    });

    criterion(4, "creation/series two-path identity", [](bool& pass) {
        ExperimentSpec spec = base_spec("creation-iterate");
        spec.window = Window(0.0, 2.0);
        spec.density = TestFunction::polynomial({1.0, 0.5});
        spec.samples = 1000;
        spec.n = 5;
        const Report rep = run_suite(spec);
        pass = rep.pass();
        return suite_detail(rep);
    });

    criterion(5, "radon-nikodym transfer", [](bool& pass) {
        ExperimentSpec spec = base_spec("rn");
        const Report rep = run_suite(spec);
        pass = rep.pass();
        return suite_detail(rep);
    });

    criterion(6, "gradient adjointness and Fock bounds", [](bool& pass) {
        ExperimentSpec spec = base_spec("fock-bounds");
        const Report rep = run_suite(spec);
        pass = rep.pass();
        return suite_detail(rep);
    });

    criterion(7, "U_Sigma unitarity and reduction", [](bool& pass) {
        ExperimentSpec iso = base_spec("usigma-isometry");
        iso.levy = "telegraph";
        const Report rep_iso = run_suite(iso);
        ExperimentSpec ops = base_spec("cp-operators");
        const Report rep_ops = run_suite(ops);
        pass = rep_iso.pass() && rep_ops.pass();
        return suite_detail(rep_iso) + "; " + suite_detail(rep_ops);
    });

    criterion(8, "gamma inner product three paths", [](bool& pass) {
        ExperimentSpec spec = base_spec("gamma-inner-threepath");
        spec.n = 8;
        const Report rep = run_suite(spec);
        pass = rep.pass();
        return suite_detail(rep);
    });

    criterion(9, "laguerre orthogonality grid", [](bool& pass) {
        ExperimentSpec spec = base_spec("laguerre-orth");
        spec.n = 3;
        spec.epsilon = 1e-3;
        const Report rep = run_suite(spec);
        pass = rep.pass();
        return suite_detail(rep);
    });

    criterion(10, "classical laguerre identity", [](bool& pass) {
        ExperimentSpec spec = base_spec("laguerre-classical");
        spec.window = Window(0.0, 2.0);
        spec.interval_T = 1.5;
        spec.charge_c = 0.4;
        spec.samples = 1000;
        spec.epsilon = 1e-3;
        const Report rep = run_suite(spec);
        pass = rep.pass();
        std::string kappa;
        for (const auto& [k, v] : rep.inputs)
            if (k == "kappa_convention") kappa = v;
        return suite_detail(rep) + ", kappa = " + kappa;
    });

    criterion(11, "combinatorial identities", [](bool& pass) {
        pass = true;
        const std::uint64_t bell_expected[] = {1,   1,    2,    5,     15,   52,
                                               203, 877,  4140, 21147, 115975};
        for (int n = 1; n <= 10; ++n) {
            const auto parts = enumerate_set_partitions(n);
            if (parts.size() != bell_expected[n] || bell_number(n) != bell_expected[n])
                pass = false;
            // classify and compare against the closed count per type
            const auto types = enumerate_partition_types(n);
            std::uint64_t total = 0;
            for (const PartitionType& t : types) {
                std::uint64_t seen = 0;
                for (const SetPartition& p : parts)
                    if (type_of(p).multiplicity == t.multiplicity) ++seen;
                if (count_of_type(t) != seen) pass = false;
                total += seen;

                // weight simplification: prod ((k-1)!)^{i_k} * count = n! prod 1/(i_k! k^{i_k})
                BigInt lhs = 1, km1 = 1;
                for (int k = 1; k <= n; ++k) {
                    if (k > 1) km1 *= (k - 1);
                    for (int c = 0; c < t.multiplicity[static_cast<size_t>(k - 1)]; ++c)
                        lhs *= km1;
                }
                BigInt nfact = 1;
                for (int j = 2; j <= n; ++j) nfact *= j;
                BigInt den = 1;
                for (int k = 1; k <= n; ++k) {
                    const int ik = t.multiplicity[static_cast<size_t>(k - 1)];
                    for (int j = 2; j <= ik; ++j) den *= j;
                    for (int c = 0; c < ik; ++c) den *= k;
                }
                if (lhs * BigInt(count_of_type(t)) * den != nfact) pass = false;
            }
            if (total != bell_expected[n]) pass = false;
        }
        return std::string("bell, type counts and block weights exact for n <= 10");
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ALL PASS" : "FAILURES",
                failures);
    return failures == 0 ? 0 : 1;
}
