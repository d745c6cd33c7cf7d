#include "cmreg/cli.hpp"

#include <ostream>
#include <sstream>

namespace cmreg::cli {

namespace {

Json to_json(const ExponentVector& v) {
  Json a = Json::array();
  for (auto e : v) a.push_back(e);
  return a;
}

std::string monomial_text(const ExponentVector& v, const Ring& ring) {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.names()[j];
    if (v[j] > 1) out += '^' + std::to_string(v[j]);
  }
  return out.empty() ? "1" : out;
}

Json ideal_json(const MonomialIdeal& J) {
  Json a = Json::array();
  for (const auto& g : J.generators()) a.push_back(to_json(g));
  return a;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::size_t last_level(const RegularityReport& report, std::optional<std::size_t> partial) {
  const auto d = static_cast<std::size_t>(report.d);
  return partial ? std::min(*partial, d) : d;
}

MonomialIdeal initial_of(const InputSpec& spec, const Flags& flags) {
  if (spec.monomial_mode || flags.monomial) return monomial_ideal(spec);
  return initial_ideal(buchberger(spec.generators, flags.regularity.groebner));
}

}  // namespace

Json to_json(const ExtendedDegree& e) {
  return e.is_finite() ? Json(e.value()) : Json(e.to_string());
}

Json to_json(const RegularityReport& report, std::optional<std::size_t> partial) {
  const std::size_t top = last_level(report, partial);
  Json j;
  j["n"] = report.n;
  j["p"] = report.p;
  j["d"] = report.d;
  Json c = Json::array(), reg_t = Json::array(), bound = Json::array();
  Json corners = Json::object();
  for (std::size_t t = 0; t <= top; ++t) {
    c.push_back(to_json(report.c[t]));
    reg_t.push_back(to_json(report.reg_t[t]));
    bound.push_back(to_json(report.bound[t]));
    Json points = Json::array();
    for (const auto& v : report.corners[t].points()) points.push_back(to_json(v));
    corners[std::to_string(t)] = std::move(points);
  }
  if (partial) {
    j["t"] = top;
    j["c"] = std::move(c);
    j["reg_t"] = to_json(report.reg_t[top]);
    j["bound_t"] = to_json(report.bound[top]);
    return j;
  }
  j["c"] = std::move(c);
  j["r"] = report.r;
  j["reg"] = report.reg;
  j["reg_t"] = std::move(reg_t);
  j["bound"] = std::move(bound);
  j["attained_t"] = optional_json(report.attained_t);
  Json retries = Json::array();
  for (const auto& rec : report.retries)
    retries.push_back({{"level", rec.level}, {"attempt", rec.attempt},
                       {"seed", rec.seed}, {"digest", rec.digest}});
  j["retries"] = std::move(retries);
  j["corners"] = std::move(corners);
  j["initial_ideal"] = ideal_json(report.initial_ideal);
  return j;
}

Json to_json(const CurveReport& report) {
  Json j;
  j["n"] = report.n;
  j["noether_ok"] = report.noether_ok;
  if (report.formulas_available()) {
    j["c1"] = to_json(report.c1);
  } else {
    j["c1"] = nullptr;
  }
  j["r"] = optional_json(report.r);
  j["reg"] = optional_json(report.reg);
  j["H_E"] = optional_json(report.H_E);
  j["H_Re"] = optional_json(report.H_Re);
  if (report.last_shift)
    j["last_shift"] = *report.last_shift;
  else if (report.cohen_macaulay())
    j["last_shift"] = "Cohen-Macaulay, F_{n-1}=0";
  else
    j["last_shift"] = nullptr;
  j["cohen_macaulay"] = report.cohen_macaulay();
  if (!report.diagnostic.empty()) j["diagnostic"] = report.diagnostic;
  return j;
}

Json to_json(const CrossCheck& check, bool verbose) {
  Json levels = Json::array();
  for (const auto& level : check.levels) {
    Json l;
    l["level"] = level.level;
    l["finite"] = level.finite;
    l["c"] = level.finite ? to_json(level.c) : Json("infinite");
    l["a_def"] = level.oracle.infinite ? Json("infinite") : to_json(level.oracle.value);
    l["ceiling"] = level.oracle.ceiling;
    l["match"] = level.match;
    if (verbose) {
      Json trace = Json::array();
      for (const auto& [degree, diff] : level.oracle.trace) trace.push_back({degree, diff});
      l["trace"] = std::move(trace);
    }
    levels.push_back(std::move(l));
  }
  Json j;
  j["levels"] = std::move(levels);
  j["r"] = optional_json(check.r);
  j["r_def"] = optional_json(check.r_def);
  j["match"] = check.match;
  return j;
}

void print_text(std::ostream& out, const RegularityReport& report, const Ring& ring,
                std::optional<std::size_t> partial) {
  const std::size_t top = last_level(report, partial);
  out << "n = " << report.n << ", p = " << report.p << ", d = " << report.d << '\n';
  out << "initial ideal: ";
  for (std::size_t k = 0; k < report.initial_ideal.size(); ++k)
    out << (k ? ", " : "") << monomial_text(report.initial_ideal.generators()[k], ring);
  out << '\n';
  for (const auto& rec : report.retries)
    out << "coordinate change at level " << rec.level << " (attempt " << rec.attempt
        << ", seed " << rec.seed << ", digest " << rec.digest << ")\n";
  for (std::size_t t = 0; t <= top; ++t) {
    out << "level " << t << ": c = " << report.c[t].to_string()
        << ", reg_t = " << report.reg_t[t].to_string()
        << ", bound = " << report.bound[t].to_string() << ", corners =";
    if (report.corners[t].empty()) out << " none";
    for (const auto& v : report.corners[t].points()) out << ' ' << v;
    out << '\n';
  }
  if (partial) {
    out << "reg_" << top << " = " << report.reg_t[top].to_string() << '\n';
    return;
  }
  out << "r = " << report.r << '\n';
  out << "reg = " << report.reg << '\n';
  if (report.attained_t) out << "attained at t = " << *report.attained_t << '\n';
}

void print_text(std::ostream& out, const CurveReport& report) {
  out << "n = " << report.n << ", noether_ok = " << (report.noether_ok ? "yes" : "no") << '\n';
  if (!report.diagnostic.empty()) out << "note: " << report.diagnostic << '\n';
  if (!report.formulas_available()) return;
  out << "c1 = " << report.c1.to_string() << '\n';
  out << "r = " << *report.r << '\n';
  out << "reg = " << *report.reg << '\n';
  if (report.H_E) out << "H(E) = " << *report.H_E << '\n';
  out << "H(R_e) = " << *report.H_Re << '\n';
  if (report.last_shift)
    out << "last shift = " << *report.last_shift << '\n';
  else
    out << "last shift not determined (arithmetically Cohen-Macaulay)\n";
}

void print_text(std::ostream& out, const CrossCheck& check, bool verbose) {
  for (const auto& level : check.levels) {
    out << "level " << level.level << ": staircase "
        << (level.finite ? level.c.to_string() : std::string("infinite")) << ", counting "
        << (level.oracle.infinite ? std::string("infinite") : level.oracle.value.to_string())
        << " (ceiling " << level.oracle.ceiling << ") " << (level.match ? "match" : "MISMATCH")
        << '\n';
    if (verbose)
      for (const auto& [degree, diff] : level.oracle.trace)
        out << "  degree " << degree << ": difference " << diff << '\n';
  }
  out << "r: staircase " << (check.r ? std::to_string(*check.r) : "undefined") << ", counting "
      << (check.r_def ? std::to_string(*check.r_def) : "undefined") << '\n';
  out << (check.match ? "match" : "MISMATCH") << '\n';
}

int run(const InputSpec& spec, const Flags& flags, std::ostream& out, std::ostream& err) {
  try {
    switch (flags.command) {
      case Command::compute: {
        if (flags.partial && *flags.partial > spec.ring->num_vars()) {
          err << "error: --partial must be at most " << spec.ring->num_vars() << '\n';
          return kExitUsage;
        }
        const auto report = (spec.monomial_mode || flags.monomial)
                                ? compute_report(monomial_ideal(spec), spec.ring, flags.regularity)
                                : compute_report(spec.generators, flags.regularity);
        if (flags.json)
          out << to_json(report, flags.partial).dump(2) << '\n';
        else
          print_text(out, report, *spec.ring, flags.partial);
        return kExitOk;
      }
      case Command::curve: {
        const auto report = curve_report(initial_of(spec, flags));
        if (flags.json)
          out << to_json(report).dump(2) << '\n';
        else
          print_text(out, report);
        if (!report.diagnostic.empty()) err << "note: " << report.diagnostic << '\n';
        return kExitOk;
      }
      case Command::oracle: {
        const auto check = cross_check(initial_of(spec, flags));
        if (flags.json)
          out << to_json(check, flags.verbose).dump(2) << '\n';
        else
          print_text(out, check, flags.verbose);
        return check.match ? kExitOk : kExitMismatch;
      }
    }
  } catch (const RetriesExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotGeneric;
  } catch (const InfiniteReductionNumber& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotGeneric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

int run_text(std::string_view text, const Flags& flags, std::ostream& out, std::ostream& err) {
  InputSpec spec;
  try {
    spec = parse_input(text, flags.characteristic);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }
  spec.options = flags.regularity;
  if (flags.monomial) {
    for (const auto& g : spec.generators)
      if (g.num_terms() != 1) {
        err << "parse error: --monomial given but generator '" << g << "' is not a monomial\n";
        return kExitUsage;
      }
  }
  return run(spec, flags, out, err);
}

}  // namespace cmreg::cli
