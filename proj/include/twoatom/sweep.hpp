#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twoatom/model.hpp"

namespace twoatom {

inline constexpr const char* kVersion = "1.0.0";

enum class Engine { master, analytic };
enum class SweepAxis { theta, detuning_l, delta, separation };

std::string engine_name(Engine engine);
std::string axis_name(SweepAxis axis);

// One requested output column (decomposition expands to five columns).
struct ObservableSpec {
    enum class Kind {
        intensity,        // I at the axis angle; theta axis only
        intensity_at,     // I at a fixed angle
        intensity_sum,    // I(theta) + I(theta2)
        contrast_antisym,
        contrast_sym,
        decomposition,    // i0, ic, is, ie, psi
    };

    Kind kind = Kind::intensity;
    double theta = 0.0;   // intensity_at, intensity_sum
    double theta2 = 0.0;  // intensity_sum only
    std::string label;    // column label override

    static ObservableSpec intensity() { return {Kind::intensity, 0.0, 0.0, {}}; }
    static ObservableSpec intensity_at(double theta, std::string label = {}) {
        return {Kind::intensity_at, theta, 0.0, std::move(label)};
    }
    static ObservableSpec intensity_sum(double theta, double theta2,
                                        std::string label = {}) {
        return {Kind::intensity_sum, theta, theta2, std::move(label)};
    }
    static ObservableSpec contrast_antisym() {
        return {Kind::contrast_antisym, 0.0, 0.0, {}};
    }
    static ObservableSpec contrast_sym() {
        return {Kind::contrast_sym, 0.0, 0.0, {}};
    }
    static ObservableSpec decomposition() {
        return {Kind::decomposition, 0.0, 0.0, {}};
    }
};

struct SweepSpec {
    SweepAxis axis = SweepAxis::theta;
    double start = 0.0;
    double stop = 3.141592653589793;
    int count = 721;
    AtomPair pair;
    Drive drive;
    CouplingMode mode;
    Engine engine = Engine::master;
    std::vector<ObservableSpec> observables;
    std::string label;
    std::vector<std::string> notes;
    int jobs = 1;
};

struct SweepResult {
    std::vector<std::string> columns;            // axis column first
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;
};

// Evaluates the pipeline at each axis point.  Deterministic; points are
// independent and may be evaluated concurrently (spec.jobs > 1) with results
// identical to the serial order.  A failing point aborts the sweep with the
// axis value attached.
SweepResult run_sweep(const SweepSpec& spec);

// Published parameter sets behind the figure-reproduction presets; captions
// are the source of truth, ambiguities are recorded in the notes.
struct Preset {
    std::string name;
    std::vector<SweepSpec> curves;  // shared axis grid
    std::vector<std::string> notes;
};

std::vector<std::string> preset_names();
Preset preset(const std::string& name);

// Runs every curve of a preset and merges the value columns over the shared
// axis grid.
SweepResult run_preset(const Preset& figure, int jobs = 1);

}  // namespace twoatom
