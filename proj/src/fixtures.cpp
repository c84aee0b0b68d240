#include "mtlmon/fixtures.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>

#include <json.hpp>

#include "mtlmon/errors.hpp"

namespace mtlmon {

namespace {

struct VarDef {
  std::string name;
  ValueType type;
  std::function<Value(double)> value_at;
};

VarDef num(std::string name, std::function<double(double)> f) {
  return VarDef{std::move(name), ValueType::Number,
                [f = std::move(f)](double t) { return Value(f(t)); }};
}

VarDef flag(std::string name, std::function<bool(double)> f) {
  return VarDef{std::move(name), ValueType::Boolean,
                [f = std::move(f)](double t) { return Value(f(t)); }};
}

TimedStateSequence build_trace(const std::vector<VarDef>& vars,
                               double t_end) {
  std::vector<std::string> names;
  std::vector<ValueType> types;
  for (const VarDef& v : vars) {
    names.push_back(v.name);
    types.push_back(v.type);
  }
  auto schema = std::make_shared<Schema>(std::move(names), std::move(types));
  std::vector<TimedState> events;
  events.reserve(static_cast<std::size_t>(t_end) + 1);
  for (double t = 0.0; t <= t_end; t += 1.0) {
    TimedState e;
    e.tau = t;
    e.schema = schema;
    e.values.reserve(vars.size());
    for (const VarDef& v : vars) e.values.push_back(v.value_at(t));
    events.push_back(std::move(e));
  }
  return TimedStateSequence(std::move(schema), std::move(events));
}

bool in_window(double t, double from, double to) {
  return t >= from && t <= to;
}

// Nominal operation with two handled trigger episodes: the slurry level
// dips under 1 m at t=100 and the output valve closes 45 s later (inside
// the 30..60 s delay window), and the steam-line pressure difference
// collapses at t=300 with the steam valve closing 40 s later (inside the
// 60 s deadline). Everything else is flat and in band.
std::vector<VarDef> base_vars() {
  std::vector<VarDef> vars;
  for (int i = 1; i <= 5; ++i) {
    vars.push_back(num("c" + std::to_string(i) + "_pressure",
                       [](double) { return 28.0; }));
  }
  for (int i = 1; i <= 5; ++i) {
    vars.push_back(
        num("c" + std::to_string(i) + "_temp", [](double) { return 220.0; }));
  }
  for (int i = 1; i <= 5; ++i) {
    vars.push_back(
        num("c" + std::to_string(i) + "_o2pp", [](double) { return 5.0; }));
  }
  vars.push_back(num("acid_conc", [](double) { return 45.0; }));
  vars.push_back(num("c5_level", [](double t) {
    return in_window(t, 100, 159) ? 0.9 : 2.5;
  }));
  vars.push_back(num("feed_flow", [](double) { return 50.0; }));
  vars.push_back(num("steam_flow", [](double) { return 10.0; }));
  vars.push_back(num("offgas_flow", [](double) { return 5.0; }));
  vars.push_back(num("steam_dp", [](double t) {
    return in_window(t, 300, 349) ? 0.05 : 0.5;
  }));
  vars.push_back(flag("steam_valve_open",
                      [](double t) { return !in_window(t, 340, 359); }));
  vars.push_back(flag("o2_valve_open", [](double) { return true; }));
  vars.push_back(flag("offgas_valve_open", [](double) { return true; }));
  vars.push_back(flag("output_valve_open",
                      [](double t) { return !in_window(t, 145, 179); }));
  vars.push_back(flag("relief_valve_open", [](double) { return false; }));
  vars.push_back(flag("feed_pump_on", [](double) { return true; }));
  return vars;
}

void override_num(std::vector<VarDef>& vars, const std::string& name,
                  std::function<double(double)> f) {
  for (VarDef& v : vars) {
    if (v.name == name) {
      v = num(name, std::move(f));
      return;
    }
  }
  throw Error("fixture override for unknown variable '" + name + "'");
}

void override_flag(std::vector<VarDef>& vars, const std::string& name,
                   std::function<bool(double)> f) {
  for (VarDef& v : vars) {
    if (v.name == name) {
      v = flag(name, std::move(f));
      return;
    }
  }
  throw Error("fixture override for unknown variable '" + name + "'");
}

std::string spec_text() {
  std::string s;
  s += "# Synthetic autoclave monitoring specification.\n";
  s += "# 26 requirements: 20 limit, 5 timed-order, 1 delayed-order.\n\n";
  s += "# Absolute limits on process variables.\n";
  for (int i = 1; i <= 5; ++i) {
    std::string c = "c" + std::to_string(i);
    s += "prop p_" + c + "_pressure_band := " + c +
         "_pressure in [27.9, 28.1];\n";
    s += "req lim_" + c + "_pressure := G p_" + c + "_pressure_band;\n";
  }
  for (int i = 1; i <= 5; ++i) {
    std::string c = "c" + std::to_string(i);
    s += "prop p_" + c + "_temp_band := " + c + "_temp in [215, 225];\n";
    s += "req lim_" + c + "_temp := G p_" + c + "_temp_band;\n";
  }
  for (int i = 1; i <= 5; ++i) {
    std::string c = "c" + std::to_string(i);
    s += "prop p_" + c + "_o2pp_band := " + c + "_o2pp in [4.5, 5.5];\n";
    s += "req lim_" + c + "_o2pp := G p_" + c + "_o2pp_band;\n";
  }
  s += "prop p_acid_band := acid_conc in [40, 50];\n";
  s += "req lim_acid := G p_acid_band;\n";
  s += "prop p_level_band := c5_level in [0.5, 4];\n";
  s += "req lim_level := G p_level_band;\n";
  s += "prop p_feed_flow_band := feed_flow in [20, 80];\n";
  s += "req lim_feed_flow := G p_feed_flow_band;\n";
  s += "prop p_steam_flow_band := steam_flow in [0, 25];\n";
  s += "req lim_steam_flow := G p_steam_flow_band;\n";
  s += "prop p_offgas_flow_band := offgas_flow in [0, 12];\n";
  s += "req lim_offgas_flow := G p_offgas_flow_band;\n";
  s += "\n# Ordered events with deadlines.\n";
  s += "prop p_low_steam_dp := steam_dp < 0.1;\n";
  s += "prop p_steam_valve_closed := steam_valve_open = false;\n";
  s += "req ord_steam_valve := timedTrigger[0,60](p_low_steam_dp, "
       "p_steam_valve_closed);\n";
  s += "prop p_c1_overpressure := c1_pressure > 28.05;\n";
  s += "prop p_relief_open := relief_valve_open = true;\n";
  s += "req ord_overpressure_relief := timedTrigger[0,30](p_c1_overpressure, "
       "p_relief_open);\n";
  s += "prop p_c2_overtemp := c2_temp > 224;\n";
  s += "req ord_overtemp_steam_cut := timedTrigger[0,60](p_c2_overtemp, "
       "p_steam_valve_closed);\n";
  s += "prop p_c1_o2_high := c1_o2pp > 5.4;\n";
  s += "prop p_o2_valve_closed := o2_valve_open = false;\n";
  s += "req ord_o2_shutoff := timedTrigger[0,45](p_c1_o2_high, "
       "p_o2_valve_closed);\n";
  s += "prop p_feed_low := feed_flow < 25;\n";
  s += "prop p_feed_pump_off := feed_pump_on = false;\n";
  s += "req ord_feed_pump := timedTrigger[0,30](p_feed_low, "
       "p_feed_pump_off);\n";
  s += "\n# Delayed order: the output valve must not close within 30 s of a\n";
  s += "# low-level event but must be closed by 60 s.\n";
  s += "prop p_level_under_1m := c5_level < 1;\n";
  s += "prop p_output_closed := output_valve_open = false;\n";
  s += "req del_output_valve := (!timedTrigger[0,30](p_level_under_1m, "
       "p_output_closed)) & timedTrigger(30,60](p_level_under_1m, "
       "p_output_closed);\n";
  return s;
}

}  // namespace

FixtureBundle make_fixture_bundle() {
  const double t_end = 600.0;
  FixtureBundle bundle;
  bundle.spec_text = spec_text();

  {
    FixtureTrace ft{"clean",
                    "nominal operation; all trigger episodes handled in time",
                    build_trace(base_vars(), t_end),
                    {}};
    bundle.traces.push_back(std::move(ft));
  }
  {
    // Off-gas valve sticks shut at t=200; pressures jump out of band at
    // t=205 and temperatures fall out of band at t=215 as steam input is
    // lost. The overpressure relief valve never opens, so its 30 s deadline
    // obligation is still open when the trace ends at t=600.
    auto vars = base_vars();
    override_flag(vars, "offgas_valve_open",
                  [](double t) { return t < 200; });
    override_num(vars, "offgas_flow",
                 [](double t) { return t < 200 ? 5.0 : 0.0; });
    for (int i = 1; i <= 5; ++i) {
      override_num(vars, "c" + std::to_string(i) + "_pressure",
                   [](double t) { return t < 205 ? 28.0 : 28.3; });
      override_num(vars, "c" + std::to_string(i) + "_temp",
                   [](double t) { return t < 215 ? 220.0 : 205.0; });
    }
    std::vector<ExpectedViolation> expected;
    for (int i = 1; i <= 5; ++i) {
      expected.push_back({"lim_c" + std::to_string(i) + "_pressure", 205.0});
    }
    for (int i = 1; i <= 5; ++i) {
      expected.push_back({"lim_c" + std::to_string(i) + "_temp", 215.0});
    }
    expected.push_back({"ord_overpressure_relief", 600.0});
    FixtureTrace ft{"stuck_offgas_valve",
                    "off-gas valve stuck shut; pressure and temperature "
                    "limits break and the relief deadline is missed",
                    build_trace(vars, t_end), std::move(expected)};
    bundle.traces.push_back(std::move(ft));
  }
  {
    // First-compartment pressure sensor reads +0.2 bar during [150, 399].
    // The limit requirement trips at t=150; the relief valve answers the
    // overpressure reading at t=170, inside its 30 s window.
    auto vars = base_vars();
    override_num(vars, "c1_pressure", [](double t) {
      return in_window(t, 150, 399) ? 28.2 : 28.0;
    });
    override_flag(vars, "relief_valve_open",
                  [](double t) { return in_window(t, 170, 219); });
    FixtureTrace ft{"pressure_sensor_bias",
                    "biased pressure measurement in compartment 1",
                    build_trace(vars, t_end),
                    {{"lim_c1_pressure", 150.0}}};
    bundle.traces.push_back(std::move(ft));
  }
  {
    // Second-compartment temperature signal dies (reads 0) at t=250.
    auto vars = base_vars();
    override_num(vars, "c2_temp",
                 [](double t) { return t < 250 ? 220.0 : 0.0; });
    FixtureTrace ft{"temp_measurement_failure",
                    "temperature measurement failure in compartment 2",
                    build_trace(vars, t_end),
                    {{"lim_c2_temp", 250.0}}};
    bundle.traces.push_back(std::move(ft));
  }
  {
    // Level measurement in the last compartment reads 0.4 m from t=350.
    // The level limit trips at t=350, and the spurious low-level trigger is
    // never answered by the output valve, so the delayed-order requirement
    // fails when the trace ends.
    auto vars = base_vars();
    override_num(vars, "c5_level", [](double t) {
      if (t >= 350) return 0.4;
      return in_window(t, 100, 159) ? 0.9 : 2.5;
    });
    FixtureTrace ft{"level_bias",
                    "biased level measurement in the last compartment",
                    build_trace(vars, t_end),
                    {{"lim_level", 350.0}, {"del_output_valve", 600.0}}};
    bundle.traces.push_back(std::move(ft));
  }
  return bundle;
}

TimedStateSequence make_clean_trace(std::size_t events) {
  if (events < 801) {
    throw Error("clean trace needs at least 801 events so one full trigger "
                "cycle fits before the quiet tail");
  }
  const double t_end = static_cast<double>(events - 1);
  // Episodes repeat every 600 s; a cycle is active only when it completes
  // 100 s before the end of the trace, so every obligation resolves.
  auto phase = [t_end](double t) -> double {
    double cycle_start = std::floor(t / 600.0) * 600.0;
    if (cycle_start + 600.0 > t_end - 100.0) return -1.0;  // quiet tail
    return t - cycle_start;
  };
  auto vars = base_vars();
  override_num(vars, "c5_level", [phase](double t) {
    return in_window(phase(t), 100, 159) ? 0.9 : 2.5;
  });
  override_flag(vars, "output_valve_open", [phase](double t) {
    return !in_window(phase(t), 145, 179);
  });
  override_num(vars, "steam_dp", [phase](double t) {
    return in_window(phase(t), 300, 349) ? 0.05 : 0.5;
  });
  override_flag(vars, "steam_valve_open", [phase](double t) {
    return !in_window(phase(t), 340, 359);
  });
  return build_trace(vars, t_end);
}

void write_fixture_bundle(const std::string& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(fs::path(directory) / "traces", ec);
  if (ec) {
    throw Error("cannot create fixture directory '" + directory +
                "': " + ec.message());
  }
  FixtureBundle bundle = make_fixture_bundle();

  auto open = [](const fs::path& p) {
    std::ofstream out(p);
    if (!out) throw Error("cannot write '" + p.string() + "'");
    return out;
  };

  {
    auto out = open(fs::path(directory) / "autoclave.spec");
    out << bundle.spec_text;
  }

  nlohmann::json manifest;
  manifest["spec"] = "autoclave.spec";
  manifest["traces"] = nlohmann::json::array();
  for (const FixtureTrace& ft : bundle.traces) {
    auto out = open(fs::path(directory) / "traces" / (ft.name + ".csv"));
    write_csv(out, ft.trace);
    nlohmann::json entry;
    entry["trace"] = "traces/" + ft.name + ".csv";
    entry["description"] = ft.description;
    entry["violations"] = nlohmann::json::array();
    for (const ExpectedViolation& v : ft.expected_violations) {
      entry["violations"].push_back(
          {{"requirement", v.requirement}, {"violation_time", v.violation_time}});
    }
    manifest["traces"].push_back(std::move(entry));
  }
  {
    auto out = open(fs::path(directory) / "expected_verdicts.json");
    out << manifest.dump(2) << "\n";
  }
  {
    auto out = open(fs::path(directory) / "README.md");
    out << "# Autoclave fixtures\n\n"
        << "Synthetic monitoring scenario for a five-compartment autoclave:\n"
        << "`autoclave.spec` holds 26 requirements (20 limit, 5 timed-order,\n"
        << "1 delayed-order) and `traces/` holds one clean run plus four\n"
        << "fault-injection runs at 1 s resolution.\n\n"
        << "The traces are stepwise synthetic profiles, not simulations of\n"
        << "real process chemistry; every expected verdict is derivable by\n"
        << "hand and is documented in `expected_verdicts.json`. Timed-order\n"
        << "and delayed-order violations are detected when the trace ends\n"
        << "(the open obligation can no longer be met), so their documented\n"
        << "violation time is the final timestamp.\n\n"
        << "Check a trace with:\n\n"
        << "    mtlmon check --spec autoclave.spec "
           "--trace traces/stuck_offgas_valve.csv --fail-on-violation\n";
  }
}

}  // namespace mtlmon
