#include "cpcool/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "cpcool/error.hpp"

namespace cpcool {

namespace {

enum class Kind {
  Frequency,
  Length,
  Force,
  Pressure,
  Density,
  Mass,
  Plain,
  Areal,
  C4,
  Time,
  TemperatureList,
  Int,
  Bool,
  Text,
  Axis,
  NuOrAuto,
  CouplingName,
};

struct KeySpec {
  std::string_view key;
  std::string_view section;
  Kind kind;
};

constexpr KeySpec kKeys[] = {
    {"wavelength", "atom", Kind::Length},
    {"linewidth", "atom", Kind::Frequency},
    {"polarizability", "atom", Kind::Plain},
    {"mass", "atom", Kind::Mass},
    {"length", "sheet", Kind::Length},
    {"width", "sheet", Kind::Length},
    {"thickness", "sheet", Kind::Length},
    {"density", "sheet", Kind::Density},
    {"youngs_modulus", "sheet", Kind::Pressure},
    {"tension", "sheet", Kind::Force},
    {"clamping", "sheet", Kind::Plain},
    {"nu", "sheet", Kind::NuOrAuto},
    {"detuning", "drive", Kind::Frequency},
    {"rabi", "drive", Kind::Frequency},
    {"eta", "drive", Kind::Plain},
    {"phonon", "drive", Kind::Frequency},
    {"coupling", "coupling", Kind::CouplingName},
    {"g", "coupling", Kind::Frequency},
    {"z_a", "coupling", Kind::Length},
    {"n0", "coupling", Kind::Areal},
    {"c4", "coupling", Kind::C4},
    {"omega_g_shift", "coupling", Kind::Bool},
    {"sweep_x", "sweep", Kind::Axis},
    {"sweep_y", "sweep", Kind::Axis},
    {"temperatures", "evolve", Kind::TemperatureList},
    {"t_min", "evolve", Kind::Time},
    {"t_max", "evolve", Kind::Time},
    {"points", "evolve", Kind::Int},
    {"output", "output", Kind::Text},
    {"quad_rel_tol", "tolerances", Kind::Plain},
    {"integrator_rel_tol", "tolerances", Kind::Plain},
};

const KeySpec* find_key(std::string_view key) {
  for (const auto& k : kKeys)
    if (k.key == key) return &k;
  return nullptr;
}

bool known_section(std::string_view s) {
  for (const auto& k : kKeys)
    if (k.section == s) return true;
  return false;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

struct UnitDef {
  std::string_view name;
  int exponent;
  bool two_pi;
};

// Empty name = bare number accepted.
const std::vector<UnitDef>& units_for(Kind kind) {
  static const std::vector<UnitDef> freq{{"Hz", 0, true},    {"kHz", 3, true}, {"MHz", 6, true},
                                         {"GHz", 9, true},   {"rad/s", 0, false}};
  static const std::vector<UnitDef> length{{"m", 0, false},   {"mm", -3, false}, {"um", -6, false},
                                           {"µm", -6, false}, {"nm", -9, false}, {"pm", -12, false}};
  static const std::vector<UnitDef> force{{"N", 0, false},   {"mN", -3, false}, {"uN", -6, false},
                                          {"µN", -6, false}, {"nN", -9, false}, {"pN", -12, false}};
  static const std::vector<UnitDef> pressure{{"Pa", 0, false},  {"kPa", 3, false}, {"MPa", 6, false},
                                             {"GPa", 9, false}, {"TPa", 12, false}};
  static const std::vector<UnitDef> density{{"", 0, false}, {"kg/m^3", 0, false}, {"kg/m3", 0, false}};
  static const std::vector<UnitDef> mass{{"", 0, false}, {"kg", 0, false}};
  static const std::vector<UnitDef> plain{{"", 0, false}};
  static const std::vector<UnitDef> areal{{"", 0, false}, {"um^-2", 0, false}, {"µm^-2", 0, false},
                                          {"m^-2", -12, false}};
  static const std::vector<UnitDef> c4{{"", 0, false}, {"Hz um^4", 0, false}, {"Hz µm^4", 0, false}};
  static const std::vector<UnitDef> time{{"s", 0, false},   {"ms", -3, false}, {"us", -6, false},
                                         {"µs", -6, false}, {"ns", -9, false}};
  static const std::vector<UnitDef> temperature{{"K", 0, false},   {"mK", -3, false},
                                                {"uK", -6, false}, {"µK", -6, false},
                                                {"nK", -9, false}};
  switch (kind) {
    case Kind::Frequency:
    case Kind::NuOrAuto:
      return freq;
    case Kind::Length:
      return length;
    case Kind::Force:
      return force;
    case Kind::Pressure:
      return pressure;
    case Kind::Density:
      return density;
    case Kind::Mass:
      return mass;
    case Kind::Areal:
      return areal;
    case Kind::C4:
      return c4;
    case Kind::Time:
      return time;
    case Kind::TemperatureList:
      return temperature;
    default:
      return plain;
  }
}

std::string unit_list(Kind kind) {
  std::string out;
  for (const auto& u : units_for(kind)) {
    if (!out.empty()) out += ", ";
    out += u.name.empty() ? "(none)" : std::string(u.name);
  }
  return out;
}

struct ParsedQuantity {
  double si;       // SI value; frequencies in rad/s
  double display;  // value in the base unit as written (Hz for Hz-family, rad/s otherwise)
  bool two_pi;
};

// Scales by rewriting the decimal exponent so "36 MHz" parses exactly as 36e6.
ParsedQuantity parse_quantity(std::string_view text, Kind kind, int line) {
  text = trim(text);
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  const std::size_t digits_begin = i;
  bool any_digit = false;
  while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) {
    any_digit |= text[i] != '.';
    ++i;
  }
  if (!any_digit) throw ConfigError("expected a number, got '" + std::string(text) + "'", line);
  const std::string mantissa(text.substr(0, i));
  int exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
    const std::size_t exp_digits = j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == exp_digits) throw ConfigError("malformed exponent in '" + std::string(text) + "'", line);
    std::string exp_text(text.substr(i + 1, j - i - 1));
    if (!exp_text.empty() && exp_text[0] == '+') exp_text.erase(0, 1);
    exponent = std::stoi(exp_text);
    i = j;
  }
  (void)digits_begin;
  const std::string_view unit = trim(text.substr(i));

  const UnitDef* match = nullptr;
  for (const auto& u : units_for(kind))
    if (u.name == unit) match = &u;
  if (match == nullptr) {
    if (unit.empty())
      throw ConfigError("missing unit (expected one of: " + unit_list(kind) + ")", line);
    throw ConfigError("unit mismatch: '" + std::string(unit) + "' (expected one of: " +
                          unit_list(kind) + ")",
                      line);
  }

  const std::string scaled = mantissa + "e" + std::to_string(exponent + match->exponent);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(scaled.data(), scaled.data() + scaled.size(), value);
  if (ec != std::errc() || ptr != scaled.data() + scaled.size() || !std::isfinite(value))
    throw ConfigError("number out of range: '" + std::string(text) + "'", line);

  ParsedQuantity q{value, value, match->two_pi};
  if (match->two_pi) {
    q.si = kTwoPi * value;
  } else if (kind == Kind::Frequency || kind == Kind::NuOrAuto) {
    q.display = value / kTwoPi;
  }
  return q;
}

int parse_int(std::string_view text, int line) {
  text = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ConfigError("expected an integer, got '" + std::string(text) + "'", line);
  return v;
}

bool parse_bool(std::string_view text, int line) {
  text = trim(text);
  if (text == "true" || text == "yes" || text == "on" || text == "1") return true;
  if (text == "false" || text == "no" || text == "off" || text == "0") return false;
  throw ConfigError("expected true or false, got '" + std::string(text) + "'", line);
}

Kind axis_kind(const std::string& parameter) { return parameter == "eta" ? Kind::Plain : Kind::Frequency; }

SweepAxis parse_axis(std::string_view text, int line) {
  const auto parts = split(text, ',');
  if (parts.size() < 4 || parts.size() > 5)
    throw ConfigError("sweep axis must be 'parameter, min, max, count[, log|linear]'", line);
  SweepAxis axis;
  axis.parameter = std::string(parts[0]);
  const auto& names = sweep_parameters();
  if (std::find(names.begin(), names.end(), axis.parameter) == names.end())
    throw ConfigError("unknown sweep parameter '" + axis.parameter + "'", line);
  const Kind kind = axis_kind(axis.parameter);
  axis.min = parse_quantity(parts[1], kind, line).display;
  axis.max = parse_quantity(parts[2], kind, line).display;
  axis.count = parse_int(parts[3], line);
  if (axis.count < 0) throw ConfigError("sweep count must be non-negative", line);
  if (parts.size() == 5) {
    if (parts[4] == "log") {
      axis.log_spaced = true;
    } else if (parts[4] == "linear") {
      axis.log_spaced = false;
    } else {
      throw ConfigError("sweep spacing must be 'log' or 'linear'", line);
    }
  }
  if (axis.log_spaced && !(axis.min * axis.max > 0.0))
    throw ConfigError("log-spaced sweep needs min and max of the same nonzero sign", line);
  return axis;
}

void require(bool ok, const std::string& what, int line) {
  if (!ok) throw ConfigError(what, line);
}

void assign(RunConfig& c, const KeySpec& spec, std::string_view raw, int line) {
  const std::string key(spec.key);
  const Kind kind = spec.kind;
  auto quantity = [&] { return parse_quantity(raw, kind, line).si; };
  auto positive = [&](double v) {
    require(v > 0.0, key + " must be positive", line);
    return v;
  };

  if (key == "wavelength") {
    c.atom.d2_wavelength = positive(quantity());
    c.atom.transition_angular_frequency = kTwoPi * kConstants.c_light / c.atom.d2_wavelength;
  } else if (key == "linewidth") {
    c.atom.linewidth_gamma = positive(quantity());
  } else if (key == "polarizability") {
    c.atom.static_polarizability = positive(quantity());
  } else if (key == "mass") {
    c.atom.atomic_mass = positive(quantity());
  } else if (key == "length") {
    c.sheet.length_L = positive(quantity());
  } else if (key == "width") {
    c.sheet.width_w = positive(quantity());
  } else if (key == "thickness") {
    c.sheet.thickness_t = positive(quantity());
  } else if (key == "density") {
    c.sheet.density_rho = positive(quantity());
  } else if (key == "youngs_modulus") {
    c.sheet.youngs_E = positive(quantity());
  } else if (key == "tension") {
    const double t = quantity();
    require(t >= 0.0, "tension must be non-negative", line);
    c.sheet.tension_T = t;
  } else if (key == "clamping") {
    c.sheet.clamping_A = positive(quantity());
  } else if (key == "nu") {
    if (trim(raw) == "auto") {
      c.nu_override.reset();
    } else {
      c.nu_override = positive(quantity());
    }
  } else if (key == "detuning") {
    c.drive.detuning_Delta = quantity();
  } else if (key == "rabi") {
    c.drive.rabi_Omega = positive(quantity());
  } else if (key == "eta") {
    const double eta = quantity();
    require(eta > 0.0 && eta < 1.0, "eta must lie in (0, 1)", line);
    c.drive.lamb_dicke_eta = eta;
  } else if (key == "phonon") {
    c.drive.phonon_omega_ph = positive(quantity());
  } else if (key == "coupling") {
    const auto v = trim(raw);
    if (v == "direct") {
      c.coupling_mode = CouplingMode::Direct;
    } else if (v == "formula") {
      c.coupling_mode = CouplingMode::Formula;
    } else {
      throw ConfigError("coupling must be 'direct' or 'formula'", line);
    }
  } else if (key == "g") {
    c.g = quantity();
  } else if (key == "z_a") {
    c.z_a = positive(quantity());
  } else if (key == "n0") {
    const double n0 = quantity();
    require(n0 >= 0.0, "n0 must be non-negative", line);
    c.n0_per_um2 = n0;
  } else if (key == "c4") {
    c.c4 = quantity();
  } else if (key == "omega_g_shift") {
    c.omega_g_shift = parse_bool(raw, line);
  } else if (key == "sweep_x" || key == "sweep_y") {
    const std::size_t slot = key == "sweep_x" ? 0 : 1;
    if (trim(raw) == "none") {
      if (slot == 0) {
        c.sweep.clear();
      } else if (c.sweep.size() > 1) {
        c.sweep.resize(1);
      }
    } else {
      const SweepAxis axis = parse_axis(raw, line);
      if (slot == 1 && c.sweep.empty()) throw ConfigError("sweep_y given without sweep_x", line);
      if (c.sweep.size() <= slot) c.sweep.resize(slot + 1);
      c.sweep[slot] = axis;
    }
  } else if (key == "temperatures") {
    std::vector<double> temps;
    for (auto part : split(raw, ',')) {
      if (part.empty()) continue;
      const double t = parse_quantity(part, kind, line).si;
      require(t >= 0.0, "temperatures must be non-negative", line);
      temps.push_back(t);
    }
    c.evolve.temperatures = std::move(temps);
  } else if (key == "t_min") {
    c.evolve.t_min = positive(quantity());
  } else if (key == "t_max") {
    c.evolve.t_max = positive(quantity());
  } else if (key == "points") {
    const int p = parse_int(raw, line);
    require(p >= 1, "points must be at least 1", line);
    c.evolve.points = p;
  } else if (key == "output") {
    auto v = trim(raw);
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
    c.output_path = std::string(v);
  } else if (key == "quad_rel_tol") {
    c.quad_rel_tol = positive(quantity());
  } else if (key == "integrator_rel_tol") {
    c.integrator_rel_tol = positive(quantity());
  }
}

// Enforces exactly one coupling mode; `lines` maps explicit keys to lines.
void resolve_coupling(RunConfig& c, const std::map<std::string, int>& lines) {
  const bool has_g = c.explicit_keys.count("g") > 0;
  const bool has_n0 = c.explicit_keys.count("n0") > 0;
  auto line_of = [&](const char* k) {
    const auto it = lines.find(k);
    return it == lines.end() ? 0 : it->second;
  };
  if (c.explicit_keys.count("coupling") == 0) {
    if (has_g && has_n0)
      throw ConfigError("conflicting coupling modes: both g and n0 given",
                        std::max(line_of("g"), line_of("n0")));
    c.coupling_mode = has_n0 ? CouplingMode::Formula : CouplingMode::Direct;
    return;
  }
  if (c.coupling_mode == CouplingMode::Direct && has_n0)
    throw ConfigError("conflicting coupling modes: n0 given with coupling = direct",
                      std::max(line_of("n0"), line_of("coupling")));
  if (c.coupling_mode == CouplingMode::Formula && has_g)
    throw ConfigError("conflicting coupling modes: g given with coupling = formula",
                      std::max(line_of("g"), line_of("coupling")));
}

std::string fmt(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

const std::vector<std::string>& sweep_parameters() {
  static const std::vector<std::string> names{"detuning", "rabi", "g", "phonon", "nu", "linewidth", "eta"};
  return names;
}

std::string sweep_column(const std::string& p) {
  if (p == "detuning") return "delta_hz";
  if (p == "rabi") return "omega_rabi_hz";
  if (p == "g") return "g_hz";
  if (p == "phonon") return "omega_ph_hz";
  if (p == "nu") return "nu_hz";
  if (p == "linewidth") return "gamma_hz";
  if (p == "eta") return "eta";
  throw ConfigError("unknown sweep parameter '" + p + "'", 0);
}

void set_sweep_parameter(RunConfig& c, const std::string& p, double v) {
  if (p == "eta") {
    c.drive.lamb_dicke_eta = v;
    return;
  }
  const double w = kTwoPi * v;
  if (p == "detuning") {
    c.drive.detuning_Delta = w;
  } else if (p == "rabi") {
    c.drive.rabi_Omega = w;
  } else if (p == "g") {
    c.g = w;
  } else if (p == "phonon") {
    c.drive.phonon_omega_ph = w;
  } else if (p == "nu") {
    c.nu_override = w;
  } else if (p == "linewidth") {
    c.atom.linewidth_gamma = w;
  } else {
    throw ConfigError("unknown sweep parameter '" + p + "'", 0);
  }
}

RunConfig default_config() {
  const auto& rp = red_point();
  RunConfig c;
  c.atom = rubidium87();
  c.atom.linewidth_gamma = rp.gamma_Gamma;
  c.sheet = default_graphene_sheet();
  c.drive = DriveParams{rp.omega_rabi, rp.delta, rp.eta, rp.omega_ph};
  c.nu_override = rp.nu;
  c.coupling_mode = CouplingMode::Direct;
  c.g = rp.g;
  c.z_a = rp.z_a;
  c.n0_per_um2 = 1.0;
  c.c4 = rp.c4;
  c.omega_g_shift = false;
  // One decade either side of the red point, as in the detuning/Rabi map.
  c.sweep = {SweepAxis{"detuning", 3.6e6, 3.6e8, 41, true}, SweepAxis{"rabi", 1.0e6, 1.0e8, 41, true}};
  c.evolve = EvolveSettings{{0.01, 1.0, 70.0, 300.0}, 1e-3, 2.0, 200};
  return c;
}

void validate(const RunConfig& c) {
  try {
    validate(c.atom);
    validate(c.sheet);
    validate(c.drive);
  } catch (const DomainError& e) {
    throw ConfigError(e.what(), 0);
  }
  if (c.coupling_mode == CouplingMode::Formula && !(c.z_a > 0.0))
    throw ConfigError("formula coupling needs z_a > 0", 0);
  if (!(c.evolve.t_max >= c.evolve.t_min)) throw ConfigError("t_max must not be below t_min", 0);
  for (const auto& axis : c.sweep) {
    if (axis.parameter == "g" && c.coupling_mode == CouplingMode::Formula)
      throw ConfigError("cannot sweep g with coupling = formula", 0);
  }
}

RunConfig parse_config(std::string_view text) {
  RunConfig c = default_config();
  std::map<std::string, int> lines;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty() || line.front() == ';') continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("malformed section header", line_no);
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!known_section(section)) throw ConfigError("unknown section [" + section + "]", line_no);
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no);
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    const KeySpec* spec = find_key(key);
    if (spec == nullptr) throw ConfigError("unknown key '" + key + "'", line_no);
    if (!section.empty() && spec->section != section)
      throw ConfigError("key '" + key + "' belongs to [" + std::string(spec->section) + "]", line_no);
    if (lines.count(key)) throw ConfigError("duplicate key '" + key + "'", line_no);
    if (value.empty()) throw ConfigError("missing value for '" + key + "'", line_no);

    assign(c, *spec, value, line_no);
    lines[key] = line_no;
    c.explicit_keys[key] = std::string(value);
  }
  resolve_coupling(c, lines);
  validate(c);
  return c;
}

void apply_override(RunConfig& c, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ConfigError("override must be key=value", 0);
  const std::string key(trim(assignment.substr(0, eq)));
  const std::string_view value = trim(assignment.substr(eq + 1));
  const KeySpec* spec = find_key(key);
  if (spec == nullptr) throw ConfigError("unknown key '" + key + "' in override", 0);
  if (value.empty()) throw ConfigError("missing value for '" + key + "'", 0);
  assign(c, *spec, value, 0);
  c.explicit_keys[key] = std::string(value);
  resolve_coupling(c, {});
  validate(c);
}

std::string dump_config(const RunConfig& c) {
  std::ostringstream os;
  auto rad = [](double v) { return fmt(v) + " rad/s"; };
  os << "[atom]\n";
  os << "wavelength = " << fmt(c.atom.d2_wavelength) << " m\n";
  os << "linewidth = " << rad(c.atom.linewidth_gamma) << "\n";
  os << "polarizability = " << fmt(c.atom.static_polarizability) << "\n";
  os << "mass = " << fmt(c.atom.atomic_mass) << " kg\n";
  os << "\n[sheet]\n";
  os << "length = " << fmt(c.sheet.length_L) << " m\n";
  os << "width = " << fmt(c.sheet.width_w) << " m\n";
  os << "thickness = " << fmt(c.sheet.thickness_t) << " m\n";
  os << "density = " << fmt(c.sheet.density_rho) << " kg/m^3\n";
  os << "youngs_modulus = " << fmt(c.sheet.youngs_E) << " Pa\n";
  os << "tension = " << fmt(c.sheet.tension_T) << " N\n";
  os << "clamping = " << fmt(c.sheet.clamping_A) << "\n";
  os << "nu = " << (c.nu_override ? rad(*c.nu_override) : std::string("auto")) << "\n";
  os << "\n[drive]\n";
  os << "detuning = " << rad(c.drive.detuning_Delta) << "\n";
  os << "rabi = " << rad(c.drive.rabi_Omega) << "\n";
  os << "eta = " << fmt(c.drive.lamb_dicke_eta) << "\n";
  os << "phonon = " << rad(c.drive.phonon_omega_ph) << "\n";
  os << "\n[coupling]\n";
  const bool direct = c.coupling_mode == CouplingMode::Direct;
  os << "coupling = " << (direct ? "direct" : "formula") << "\n";
  if (direct) {
    os << "g = " << rad(c.g) << "\n";
  } else {
    os << "n0 = " << fmt(c.n0_per_um2) << " um^-2\n";
  }
  os << "z_a = " << fmt(c.z_a) << " m\n";
  os << "c4 = " << fmt(c.c4) << " Hz um^4\n";
  os << "omega_g_shift = " << (c.omega_g_shift ? "true" : "false") << "\n";
  os << "\n[sweep]\n";
  const char* slots[] = {"sweep_x", "sweep_y"};
  for (std::size_t i = 0; i < 2; ++i) {
    os << slots[i] << " = ";
    if (i < c.sweep.size()) {
      const auto& a = c.sweep[i];
      const std::string unit = a.parameter == "eta" ? "" : " Hz";
      os << a.parameter << ", " << fmt(a.min) << unit << ", " << fmt(a.max) << unit << ", "
         << a.count << ", " << (a.log_spaced ? "log" : "linear") << "\n";
    } else {
      os << "none\n";
    }
  }
  os << "\n[evolve]\n";
  os << "temperatures = ";
  for (std::size_t i = 0; i < c.evolve.temperatures.size(); ++i)
    os << (i ? ", " : "") << fmt(c.evolve.temperatures[i]) << " K";
  os << "\n";
  os << "t_min = " << fmt(c.evolve.t_min) << " s\n";
  os << "t_max = " << fmt(c.evolve.t_max) << " s\n";
  os << "points = " << c.evolve.points << "\n";
  os << "\n[output]\n";
  os << "output = \"" << c.output_path << "\"\n";
  os << "\n[tolerances]\n";
  os << "quad_rel_tol = " << fmt(c.quad_rel_tol) << "\n";
  os << "integrator_rel_tol = " << fmt(c.integrator_rel_tol) << "\n";
  return os.str();
}

MembraneMode resolved_mode(const RunConfig& c) {
  return c.nu_override ? mode_descriptor(c.sheet, *c.nu_override) : mode_descriptor(c.sheet);
}

CouplingInput resolved_coupling(const RunConfig& c) {
  CouplingInput in;
  const MembraneMode mode = resolved_mode(c);
  // n0 in um^-2 -> m^-2 for the Fourier transform.
  in.omega_g = cp_fourier_wq(c.c4, mode.q0, c.z_a, c.n0_per_um2 * 1e12);
  in.n0_per_um2 = c.n0_per_um2;
  in.shift_omega = c.omega_g_shift;
  if (c.coupling_mode == CouplingMode::Direct) in.g_override = c.g;
  return in;
}

EffectiveParams resolved_params(const RunConfig& c) {
  return effective_params(c.atom, c.drive, resolved_mode(c), resolved_coupling(c));
}

}  // namespace cpcool
