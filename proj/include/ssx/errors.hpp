#ifndef SSX_ERRORS_HPP
#define SSX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ssx {

// Base class for everything this library can throw on its own.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- series-core ---
struct NonUnitConstant : Error {
    NonUnitConstant() : Error("series constant term must be 1") {}
};
struct ZeroLeadingCoefficient : Error {
    ZeroLeadingCoefficient() : Error("designated leading coefficient is zero") {}
};

// --- approximant construction / evaluation ---
struct ComplexBranch : Error {
    explicit ComplexBranch(const std::string& what) : Error("complex branch: " + what) {}
};
struct DegenerateMoments : Error {
    explicit DegenerateMoments(const std::string& what) : Error("degenerate moment system: " + what) {}
};
struct NoRealSolution : Error {
    explicit NoRealSolution(const std::string& what) : Error("no real solution: " + what) {}
};
struct NegativeBase : Error {
    explicit NegativeBase(double a) : Error("factor base A_i <= 0: A = " + std::to_string(a)) {}
};
struct NegativeTower : Error {
    int level;
    explicit NegativeTower(int lvl)
        : Error("negative root tower at level " + std::to_string(lvl)), level(lvl) {}
};
struct DomainError : Error {
    double where;
    DomainError(double x, const std::string& what)
        : Error("domain error at x = " + std::to_string(x) + ": " + what), where(x) {}
};
struct ZeroGamma : Error {
    ZeroGamma() : Error("gamma = beta - alpha must be nonzero") {}
};
struct NoFiniteLimit : Error {
    explicit NoFiniteLimit(const std::string& what) : Error("correction has no finite limit: " + what) {}
};

// --- Pade baseline ---
struct SingularPadeSystem : Error {
    SingularPadeSystem(int M, int N)
        : Error("singular Pade system for P_{" + std::to_string(M) + "/" + std::to_string(N) + "}") {}
};
struct NegativeRatio : Error {
    explicit NegativeRatio(double r)
        : Error("Pade leading-coefficient ratio nonpositive: r = " + std::to_string(r)) {}
};

// --- double renormalization ---
struct VelocityZeroCrossing : Error {
    double where;
    explicit VelocityZeroCrossing(double phi)
        : Error("flow velocity vanishes at phi = " + std::to_string(phi)), where(phi) {}
};
struct InversionDomain : Error {
    explicit InversionDomain(double phi)
        : Error("expansion-function inversion undefined at phi = " + std::to_string(phi)) {}
};
struct QuadratureFailure : Error {
    explicit QuadratureFailure(const std::string& what) : Error("quadrature failure: " + what) {}
};

// --- corpus ---
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};
struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& what) : Error("invariant violation: " + what) {}
};
struct UnknownFunction : Error {
    explicit UnknownFunction(const std::string& id) : Error("no closed-form oracle for '" + id + "'") {}
};
struct PrecisionLoss : Error {
    explicit PrecisionLoss(const std::string& what) : Error("oracle precision loss: " + what) {}
};

} // namespace ssx

#endif
