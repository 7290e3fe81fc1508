#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "enopt/errors.hpp"
#include "enopt/machine.hpp"

namespace enopt {

/// Coefficients of the parametric CPU power model
///   P(f, p, s) = p * (c1 * f^3 + c2 * f) + c3 + c4 * s
/// with f in GHz and all terms in watts.
struct PowerCoefficients {
    double c1 = 0.0;  ///< W/GHz^3, per-core switching term
    double c2 = 0.0;  ///< W/GHz, per-core leakage-derived term
    double c3 = 0.0;  ///< W, static floor
    double c4 = 0.0;  ///< W/socket

    /// c1 > 0 and c2 >= 0 are expected physically; a fit on noisy data may
    /// violate this. Callers warn, they do not reject.
    bool physically_plausible() const {
        return std::isfinite(c1) && std::isfinite(c2) && std::isfinite(c3) &&
               std::isfinite(c4) && c1 > 0.0 && c2 >= 0.0;
    }
};

/// Steady-state mean power measured at one configuration.
struct PowerObservation {
    Configuration config;
    double mean_watts = 0.0;
    long long sample_count = 1;
};

/// Evaluates the power model, in watts.
inline double power_eval(const PowerCoefficients& c, const Configuration& cfg) {
    const double f = cfg.freq_ghz;
    return cfg.cores * (c.c1 * f * f * f + c.c2 * f) + c.c3 + c.c4 * cfg.sockets;
}

/// Least-squares fit of the four model coefficients from aggregated
/// observations. Solved by column-pivoted Householder QR; the f^3 column
/// spans three orders of magnitude against the intercept, so normal
/// equations are avoided.
///
/// Throws RankDeficientDesign when the regressor matrix [p*f^3, p*f, 1, s]
/// is numerically rank-deficient (e.g. all observations on one socket).
inline PowerCoefficients fit_power(const std::vector<PowerObservation>& observations) {
    static const char* kColumnNames[4] = {"p*f^3", "p*f", "intercept", "sockets"};

    const auto n = static_cast<Eigen::Index>(observations.size());
    if (n < 4) {
        throw RankDeficientDesign("fit_power: need at least 4 observations, got " +
                                  std::to_string(observations.size()));
    }
    Eigen::MatrixXd design(n, 4);
    Eigen::VectorXd target(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& obs = observations[static_cast<std::size_t>(i)];
        const double f = obs.config.freq_ghz;
        design(i, 0) = obs.config.cores * f * f * f;
        design(i, 1) = obs.config.cores * f;
        design(i, 2) = 1.0;
        design(i, 3) = obs.config.sockets;
        target(i) = obs.mean_watts;
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-10);
    if (qr.rank() < 4) {
        const auto perm = qr.colsPermutation().indices();
        std::string cols;
        for (Eigen::Index k = qr.rank(); k < 4; ++k) {
            if (!cols.empty()) cols += ", ";
            cols += kColumnNames[perm(k)];
        }
        throw RankDeficientDesign("fit_power: design matrix is rank-deficient (rank " +
                                  std::to_string(qr.rank()) + " of 4); collinear column(s): " +
                                  cols);
    }
    const Eigen::Vector4d sol = qr.solve(target);
    return PowerCoefficients{sol(0), sol(1), sol(2), sol(3)};
}

/// Mean of |y_i - yhat_i| / y_i, as a fraction.
inline double percentage_absolute_error(const std::vector<double>& actual,
                                        const std::vector<double>& predicted) {
    if (actual.size() != predicted.size()) {
        throw std::invalid_argument("percentage_absolute_error: length mismatch");
    }
    if (actual.empty()) {
        throw EmptyInput("percentage_absolute_error: empty input");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        if (actual[i] == 0.0) {
            throw ZeroActualValue("percentage_absolute_error: actual value at index " +
                                  std::to_string(i) + " is zero");
        }
        sum += std::abs(actual[i] - predicted[i]) / actual[i];
    }
    return sum / static_cast<double>(actual.size());
}

inline double rmse(const std::vector<double>& actual, const std::vector<double>& predicted) {
    if (actual.size() != predicted.size()) {
        throw std::invalid_argument("rmse: length mismatch");
    }
    if (actual.empty()) {
        throw EmptyInput("rmse: empty input");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double r = actual[i] - predicted[i];
        sum += r * r;
    }
    return std::sqrt(sum / static_cast<double>(actual.size()));
}

}  // namespace enopt
