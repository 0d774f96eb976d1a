#include "gnnbench/golden.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "gnnbench/matlang.hpp"
#include "gnnbench/models.hpp"
#include "gnnbench/spectral.hpp"
#include "gnnbench/wl.hpp"

namespace gnnbench::golden {

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

namespace {

class Recorder {
public:
    explicit Recorder(Report& r) : r_(r) {}

    void value(std::string name, double expected, double actual, double tol = 0.0) {
        const bool pass = std::isfinite(actual) && std::abs(actual - expected) <= tol;
        r_.checks.push_back({std::move(name), expected, actual, tol, pass});
    }
    void flag(std::string name, bool expected, bool actual) {
        value(std::move(name), expected ? 1.0 : 0.0, actual ? 1.0 : 0.0);
    }

private:
    Report& r_;
};

double sentence(const char* text, const Graph& g) { return matlang::eval_sentence(*matlang::parse(text), g); }

double count_near(const std::vector<double>& values, double center, double tol) {
    return static_cast<double>(
        std::count_if(values.begin(), values.end(), [&](double v) { return std::abs(v - center) <= tol; }));
}

constexpr const char* kHadamardSentence = "ones' * f:square(had(A, A^2)^2 * ones)";

}  // namespace

Report run_suite(const Inputs& in) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    Recorder rec(report);

    // Decalin / Bicyclopentyl
    rec.value("decalin tr(A^5)", 0.0, sentence("tr(A^5)", in.decalin));
    rec.value("bicyclopentyl tr(A^5)", 20.0, sentence("tr(A^5)", in.bicyclopentyl));
    rec.value("decalin lambda_max", 2.0, spectral::lambda_max(in.decalin), 1e-3);
    rec.value("bicyclopentyl lambda_max", 1.8418, spectral::lambda_max(in.bicyclopentyl), 1e-3);
    const auto cheb = models::default_spec(models::ModelKind::chebnet);
    rec.value("decalin chebnet 1'C2 1", -9.9327, models::static_supports(cheb, in.decalin)[1].sum(), 1e-3);
    rec.value("bicyclopentyl chebnet 1'C2 1", -9.9269, models::static_supports(cheb, in.bicyclopentyl)[1].sum(), 1e-3);
    rec.value("decalin normalized laplacian vs printed", 0.0,
              max_abs_diff(laplacian(in.decalin, LaplacianKind::normalized), decalin_laplacian_printed()), 5e-3);
    rec.value("bicyclopentyl normalized laplacian vs printed", 0.0,
              max_abs_diff(laplacian(in.bicyclopentyl, LaplacianKind::normalized), bicyclopentyl_laplacian_printed()),
              5e-3);
    rec.flag("decalin/bicyclopentyl 1-WL equivalent", true, wl::wl1_equivalent(in.decalin, in.bicyclopentyl).equivalent);
    rec.flag("decalin/bicyclopentyl 2-FWL equivalent", false,
             wl::fwl2_equivalent(in.decalin, in.bicyclopentyl).equivalent);
    {
        const auto spec = models::default_spec(models::ModelKind::gnnml3);
        const std::vector<std::uint64_t> seeds{models::run_seed(0, 0), models::run_seed(0, 1), models::run_seed(0, 2)};
        rec.flag("decalin/bicyclopentyl GNNML3 distinguished", true,
                 models::pair_distinguished(spec, in.decalin, in.bicyclopentyl, seeds, 1e-3));
    }

    // Cospectral 4-regular pair
    static constexpr std::array<std::pair<const char*, double>, 4> traces{
        {{"tr(A^2)", 40.0}, {"tr(A^3)", 48.0}, {"tr(A^4)", 360.0}, {"tr(A^5)", 920.0}}};
    for (const auto& [expr, want] : traces) {
        rec.value(std::string("cospectral G ") + expr, want, sentence(expr, in.cospectral_g));
        rec.value(std::string("cospectral H ") + expr, want, sentence(expr, in.cospectral_h));
    }
    rec.value("cospectral G hadamard sentence", 6032.0, sentence(kHadamardSentence, in.cospectral_g));
    rec.value("cospectral H hadamard sentence", 5872.0, sentence(kHadamardSentence, in.cospectral_h));
    {
        static constexpr std::array<double, 10> printed{0, 0.44, 0.61, 0.75, 1.25, 1.25, 1.25, 1.25, 1.56, 1.64};
        for (const auto* which : {"G", "H"}) {
            const Graph& g = which[0] == 'G' ? in.cospectral_g : in.cospectral_h;
            const auto lambda = spectral::eig_sym(laplacian(g, LaplacianKind::normalized)).lambda;
            double worst = lambda.size() == printed.size() ? 0.0 : INFINITY;
            for (std::size_t i = 0; i < std::min(lambda.size(), printed.size()); ++i)
                worst = std::max(worst, std::abs(lambda[i] - printed[i]));
            rec.value(std::string("cospectral ") + which + " spectrum vs printed", 0.0, worst, 1e-2);
        }
    }
    rec.flag("cospectral pair 1-WL equivalent", true, wl::wl1_equivalent(in.cospectral_g, in.cospectral_h).equivalent);
    rec.flag("cospectral pair 2-FWL equivalent", false, wl::fwl2_equivalent(in.cospectral_g, in.cospectral_h).equivalent);

    // Strongly regular pair
    rec.value("rook hadamard sentence", 331776.0, sentence(kHadamardSentence, in.rook));
    rec.value("shrikhande hadamard sentence", 331776.0, sentence(kHadamardSentence, in.shrikhande));
    rec.value("rook 3-tensor statistic", 205632.0, wl::fwl3_tensor_statistic(in.rook));
    rec.value("shrikhande 3-tensor statistic", 208704.0, wl::fwl3_tensor_statistic(in.shrikhande));
    for (const auto* which : {"rook", "shrikhande"}) {
        const Graph& g = which[0] == 'r' ? in.rook : in.shrikhande;
        const auto lambda = spectral::eig_sym(laplacian(g, LaplacianKind::normalized)).lambda;
        rec.value(std::string(which) + " eigenvalue 0 multiplicity", 1.0, count_near(lambda, 0.0, 1e-2));
        rec.value(std::string(which) + " eigenvalue 0.667 multiplicity", 6.0, count_near(lambda, 0.667, 1e-2));
        rec.value(std::string(which) + " eigenvalue 1.33 multiplicity", 9.0, count_near(lambda, 1.333, 1e-2));
        const Matrix d = degree_vector(g);
        rec.value(std::string(which) + " minimum degree", 6.0, *std::min_element(d.data().begin(), d.data().end()));
        rec.value(std::string(which) + " maximum degree", 6.0, *std::max_element(d.data().begin(), d.data().end()));
    }
    rec.flag("rook/shrikhande 2-FWL equivalent", true, wl::fwl2_equivalent(in.rook, in.shrikhande).equivalent);

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace gnnbench::golden
