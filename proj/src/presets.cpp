#include <cmath>
#include <numbers>
#include <stdexcept>

#include "twoatom/sweep.hpp"

namespace twoatom {

namespace {

constexpr double kPi = std::numbers::pi;

// Γ2/Γ1 = 10 in Γ0 units.
const AtomPair kUnequalRates{2.0 / 11.0, 20.0 / 11.0, 0.0, 0.5, kPi / 2};

SweepSpec theta_curve(const AtomPair& pair, const Drive& drive,
                      CouplingMode mode, Engine engine, std::string label) {
    SweepSpec spec;
    spec.axis = SweepAxis::theta;
    spec.start = 0.0;
    spec.stop = kPi;
    spec.count = 721;
    spec.pair = pair;
    spec.drive = drive;
    spec.mode = mode;
    spec.engine = engine;
    spec.observables = {ObservableSpec::intensity()};
    spec.label = std::move(label);
    return spec;
}

SweepSpec detuning_curve(const AtomPair& pair, CouplingMode mode,
                         Engine engine, std::string label, double from,
                         double to, int count,
                         std::vector<ObservableSpec> observables) {
    SweepSpec spec;
    spec.axis = SweepAxis::detuning_l;
    spec.start = from;
    spec.stop = to;
    spec.count = count;
    spec.pair = pair;
    spec.drive = Drive{0.2, 0.0, kPi / 2, 0.0};
    spec.mode = mode;
    spec.engine = engine;
    spec.observables = std::move(observables);
    spec.label = std::move(label);
    return spec;
}

struct LabelledValue {
    double value;
    const char* label;
};

Preset make_fig4() {
    Preset figure;
    figure.name = "fig4";
    const Drive drive{0.2, 0.0, kPi / 2, 0.0};
    for (const auto& [delta, label] :
         {LabelledValue{0.0, "delta=0"}, LabelledValue{0.5, "delta=0.5"},
          LabelledValue{-0.5, "delta=-0.5"}, LabelledValue{20.0, "delta=20"}}) {
        const AtomPair pair{1.0, 1.0, delta, 0.25, kPi / 2};
        figure.curves.push_back(theta_curve(
            pair, drive, CouplingMode::independent(), Engine::analytic, label));
    }
    figure.notes.push_back(
        "the delta=20 curve is published scaled by 100; raw values here");
    return figure;
}

Preset make_fig5() {
    Preset figure;
    figure.name = "fig5";
    const AtomPair base{1.0, 1.0, 2.0, 0.5, kPi / 2};
    for (const auto& [dl, label] :
         {LabelledValue{0.0, "detuning_l=0"}, LabelledValue{1.0, "detuning_l=1"},
          LabelledValue{2.0, "detuning_l=2"},
          LabelledValue{3.0, "detuning_l=3"}}) {
        const Drive drive{0.2, dl, kPi / 2, 0.0};
        figure.curves.push_back(theta_curve(
            base, drive, CouplingMode::independent(), Engine::analytic, label));
    }
    figure.notes.push_back(
        "published figure varies detuning_l continuously; four slices here");
    return figure;
}

Preset make_fig6(const char* name, double separation, CouplingMode mode,
                 Engine engine) {
    Preset figure;
    figure.name = name;
    const Drive drive{0.2, -0.75, kPi / 2, 0.0};
    for (const auto& [delta, label] :
         {LabelledValue{2.0, "delta=2"}, LabelledValue{-2.0, "delta=-2"},
          LabelledValue{0.0, "delta=0"}}) {
        const AtomPair pair{1.0, 1.0, delta, separation, kPi / 2};
        figure.curves.push_back(theta_curve(pair, drive, mode, engine, label));
    }
    return figure;
}

Preset make_fig7(const char* name, CouplingMode mode, Engine engine) {
    Preset figure;
    figure.name = name;
    figure.curves.push_back(detuning_curve(
        kUnequalRates, mode, engine, "", -10.0, 10.0, 401,
        {ObservableSpec::intensity_at(kPi / 3, "I(pi/3)"),
         ObservableSpec::intensity_at(2 * kPi / 3, "I(2pi/3)"),
         ObservableSpec::intensity_sum(kPi / 3, 2 * kPi / 3, "sum")}));
    return figure;
}

Preset make_fig8() {
    Preset figure;
    figure.name = "fig8";
    struct Curve {
        double delta;
        bool unequal;
        const char* label;
    };
    for (const Curve& curve :
         {Curve{1.0, true, "delta=1 rates=10:1"},
          Curve{0.0, true, "delta=0 rates=10:1"},
          Curve{1.0, false, "delta=1 rates=1:1"}}) {
        AtomPair pair = curve.unequal ? kUnequalRates
                                      : AtomPair{1.0, 1.0, 0.0, 0.5, kPi / 2};
        pair.delta = curve.delta;
        figure.curves.push_back(detuning_curve(
            pair, CouplingMode::independent(), Engine::analytic, curve.label,
            -10.0, 10.0, 401, {ObservableSpec::contrast_antisym()}));
    }
    return figure;
}

Preset make_fig9() {
    Preset figure = make_fig6("fig9", 1.0, CouplingMode::independent(),
                              Engine::analytic);
    return figure;
}

Preset make_fig11() {
    Preset figure;
    figure.name = "fig11";
    AtomPair pair{1.0, 1.0, 2.0, 0.5, kPi / 2};
    figure.curves.push_back(detuning_curve(
        pair, CouplingMode::independent(), Engine::analytic, "independent",
        -5.0, 5.0, 1001, {ObservableSpec::contrast_antisym()}));
    figure.curves.push_back(detuning_curve(
        pair, CouplingMode::interacting(), Engine::master, "interacting",
        -5.0, 5.0, 1001, {ObservableSpec::contrast_antisym()}));
    return figure;
}

Preset make_fig13() {
    Preset figure;
    figure.name = "fig13";
    AtomPair pair = kUnequalRates;
    pair.separation = 1.0;
    const double pair_a = std::acos(0.25);   // 0.420π, with 0.770π
    const double pair_b = std::acos(0.75);   // 0.230π, with 0.580π
    figure.curves.push_back(detuning_curve(
        pair, CouplingMode::interacting(), Engine::master, "", -10.0, 10.0,
        401,
        {ObservableSpec::intensity_at(pair_a, "I pair(0.42pi,0.77pi)"),
         ObservableSpec::intensity_at(pair_b, "I pair(0.23pi,0.58pi)"),
         ObservableSpec::intensity_sum(pair_a, pair_b, "sum")}));
    figure.notes.push_back(
        "both members of an antisymmetric pair share one intensity; each "
        "column reports the common value at cos(theta) = 1/4 resp. 3/4");
    return figure;
}

Preset make_fig14() {
    Preset figure;
    figure.name = "fig14";
    for (const auto& [delta, label] :
         {LabelledValue{0.0, "delta=0"}, LabelledValue{0.5, "delta=0.5"},
          LabelledValue{20.0, "delta=20"}}) {
        const AtomPair pair{1.0, 1.0, delta, 0.25, kPi / 2};
        figure.curves.push_back(
            detuning_curve(pair, CouplingMode::independent(), Engine::analytic,
                           label, -10.0, 10.0, 401,
                           {ObservableSpec::contrast_sym()}));
    }
    return figure;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"fig4",  "fig5",  "fig6",  "fig7",  "fig8",  "fig9",
            "fig10", "fig11", "fig12", "fig13", "fig14"};
}

Preset preset(const std::string& name) {
    if (name == "fig4") return make_fig4();
    if (name == "fig5") return make_fig5();
    if (name == "fig6")
        return make_fig6("fig6", 0.5, CouplingMode::independent(),
                         Engine::analytic);
    if (name == "fig7")
        return make_fig7("fig7", CouplingMode::independent(),
                         Engine::analytic);
    if (name == "fig8") return make_fig8();
    if (name == "fig9") return make_fig9();
    if (name == "fig10")
        return make_fig6("fig10", 0.5, CouplingMode::interacting(),
                         Engine::master);
    if (name == "fig11") return make_fig11();
    if (name == "fig12")
        return make_fig7("fig12", CouplingMode::interacting(),
                         Engine::master);
    if (name == "fig13") return make_fig13();
    if (name == "fig14") return make_fig14();
    throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace twoatom
