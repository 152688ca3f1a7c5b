#include "pile/io/table.hpp"

#include <cmath>
#include <sstream>

#include "pile/io/units.hpp"

namespace pile::io {

namespace {

double reported_coord(double x, double pile_length, DepthFrom depth_from) {
    return depth_from == DepthFrom::Tip ? x : pile_length - x;
}

}  // namespace

const char* existence_name(Existence existence) {
    switch (existence) {
        case Existence::ExistsInterior: return "EXISTS_INTERIOR";
        case Existence::AtTip: return "AT_TIP";
        case Existence::AtHead: return "AT_HEAD";
        case Existence::Absent: return "ABSENT";
    }
    return "?";
}

const char* scenario_pair_name(ScenarioPair pair) {
    return pair == ScenarioPair::SameSign ? "same-sign" : "opposite-sign";
}

void write_profile_csv(std::ostream& out, const ResponseProfile& profile,
                       double pile_length, DepthFrom depth_from) {
    out << (depth_from == DepthFrom::Tip ? "x_m" : "depth_m")
        << ",u_thermal,u_mech,u_combined,eps_thermal,eps_mech,eps_combined,"
           "sig_thermal_Pa,sig_mech_Pa,sig_combined_Pa\n";
    const size_t n = profile.x.size();
    for (size_t k = 0; k < n; ++k) {
        // rows ascend in the reported coordinate
        const size_t i = depth_from == DepthFrom::Tip ? k : n - 1 - k;
        out << format_double(reported_coord(profile.x[i], pile_length, depth_from)) << ','
            << format_double(profile.displacement[i].thermal) << ','
            << format_double(profile.displacement[i].mechanical) << ','
            << format_double(profile.displacement[i].combined) << ','
            << format_double(profile.strain[i].thermal) << ','
            << format_double(profile.strain[i].mechanical) << ','
            << format_double(profile.strain[i].combined) << ','
            << format_double(profile.stress[i].thermal) << ','
            << format_double(profile.stress[i].mechanical) << ','
            << format_double(profile.stress[i].combined) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep, double pile_length,
                     DepthFrom depth_from) {
    out << "eta,x0bar_m,exists_flag,max_sigma_Pa,max_sigma_location_m\n";
    for (const SweepRecord& rec : sweep.records) {
        out << format_double(rec.eta) << ',';
        if (rec.combined_null) {
            out << format_double(
                reported_coord(*rec.combined_null, pile_length, depth_from));
        }
        out << ',' << (rec.combined_null ? '1' : '0') << ','
            << format_double(rec.max_stress.value) << ','
            << format_double(
                   reported_coord(rec.max_stress.location, pile_length, depth_from))
            << '\n';
    }
}

std::string report_table(const NullPointReport& report, const PileSystem& system) {
    std::ostringstream out;
    out << "Null point report\n";
    out << "  scenario:               " << scenario_name(report.scenario) << "\n";
    if (report.eta) {
        out << "  eta:                    " << format_double(*report.eta) << "\n";
    }
    out << "  thermal null point:     " << format_double(report.thermal_null) << " m\n";
    out << "  combined null point:    ";
    if (report.combined_null) {
        out << format_double(*report.combined_null) << " m";
    } else {
        out << "ABSENT";
    }
    out << "\n  existence:              " << existence_name(report.existence) << "\n";
    if (report.thresholds) {
        out << "  eta threshold (printed): " << format_double(report.thresholds->printed)
            << "\n";
        out << "  eta threshold (in-pile): " << format_double(report.thresholds->in_pile)
            << "\n";
    }
    out << "  max |stress| location:  " << format_double(report.max_stress.location)
        << " m\n";
    out << "  max |stress| value:     " << format_double(report.max_stress.value)
        << " Pa\n";
    out << "  pile length:            " << format_double(system.geometry.length) << " m\n";
    return out.str();
}

}  // namespace pile::io
