#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace enopt {

/// Admissible operating points of one shared-memory compute node.
struct MachineSpec {
    std::vector<double> freq_grid_ghz;  ///< strictly increasing, all > 0
    int cores_per_socket = 1;
    int num_sockets = 1;

    int total_cores() const { return cores_per_socket * num_sockets; }
    double min_freq_ghz() const { return freq_grid_ghz.front(); }
    double max_freq_ghz() const { return freq_grid_ghz.back(); }

    /// Packing policy: fill a socket completely before enabling the next one.
    int sockets_for(int cores) const {
        return static_cast<int>((cores + cores_per_socket - 1) / cores_per_socket);
    }

    bool has_freq(double f_ghz) const {
        for (double g : freq_grid_ghz) {
            if (std::abs(g - f_ghz) <= 1e-9) return true;
        }
        return false;
    }

    void validate() const {
        if (freq_grid_ghz.empty()) {
            throw std::invalid_argument("MachineSpec: empty frequency grid");
        }
        double prev = 0.0;
        for (double f : freq_grid_ghz) {
            if (!(f > prev)) {
                throw std::invalid_argument(
                    "MachineSpec: frequency grid must be strictly increasing and positive");
            }
            prev = f;
        }
        if (cores_per_socket < 1 || num_sockets < 1) {
            throw std::invalid_argument("MachineSpec: cores_per_socket and num_sockets must be >= 1");
        }
    }
};

/// Builds an evenly spaced grid in exact millihertz steps so the doubles
/// come out clean (1.3, not 1.3000000000000003) and survive text round-trips.
inline std::vector<double> make_freq_grid(double lo_ghz, double hi_ghz, double step_ghz) {
    const auto lo = static_cast<std::int64_t>(std::llround(lo_ghz * 1000.0));
    const auto hi = static_cast<std::int64_t>(std::llround(hi_ghz * 1000.0));
    const auto step = static_cast<std::int64_t>(std::llround(step_ghz * 1000.0));
    if (step <= 0 || hi < lo) {
        throw std::invalid_argument("make_freq_grid: need step > 0 and hi >= lo");
    }
    std::vector<double> grid;
    for (std::int64_t mhz = lo; mhz <= hi; mhz += step) {
        grid.push_back(static_cast<double>(mhz) / 1000.0);
    }
    return grid;
}

/// One candidate operating point: frequency, active cores, active sockets.
struct Configuration {
    double freq_ghz = 0.0;
    int cores = 0;
    int sockets = 0;

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.freq_ghz == b.freq_ghz && a.cores == b.cores && a.sockets == b.sockets;
    }
};

inline void validate_config(const MachineSpec& machine, const Configuration& cfg) {
    if (!machine.has_freq(cfg.freq_ghz)) {
        throw std::invalid_argument("Configuration: frequency " + std::to_string(cfg.freq_ghz) +
                                    " GHz not in the machine grid");
    }
    if (cfg.cores < 1 || cfg.cores > machine.total_cores()) {
        throw std::invalid_argument("Configuration: core count " + std::to_string(cfg.cores) +
                                    " outside [1, " + std::to_string(machine.total_cores()) + "]");
    }
    if (cfg.sockets != machine.sockets_for(cfg.cores)) {
        throw std::invalid_argument("Configuration: socket count " + std::to_string(cfg.sockets) +
                                    " violates the packing policy");
    }
}

/// Configuration with the socket count derived by the packing policy.
inline Configuration packed_config(const MachineSpec& machine, double freq_ghz, int cores) {
    Configuration cfg{freq_ghz, cores, machine.sockets_for(cores)};
    validate_config(machine, cfg);
    return cfg;
}

}  // namespace enopt
