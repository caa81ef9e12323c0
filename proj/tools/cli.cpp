#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "polya/biquad.hpp"
#include "polya/constructors.hpp"
#include "polya/cubic.hpp"
#include "polya/density.hpp"
#include "polya/errors.hpp"
#include "polya/formoracle.hpp"
#include "polya/quadfield.hpp"
#include "polya/unit_cache.hpp"

namespace polya::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Json, Tsv };

struct Options {
  Format format = Format::Json;
  std::string cache_path;
  Limits limits;
  std::string method = "auto";
};

/// Integers that fit in 64 bits are JSON numbers; larger ones are strings.
Json big(const Int& v) {
  if (auto small = to_int64(v)) return *small;
  return to_string(v);
}

Json big_list(const std::vector<Int>& values) {
  Json list = Json::array();
  for (const auto& v : values) list.push_back(big(v));
  return list;
}

UnitMethod parse_method(const std::string& name) {
  if (name == "auto") return UnitMethod::Auto;
  if (name == "full") return UnitMethod::FullUnit;
  if (name == "midpoint") return UnitMethod::CycleMidpoint;
  if (name == "genus") return UnitMethod::Genus;
  throw DomainError("unknown unit method '" + name + "'");
}

template <typename T>
T parse_machine(const std::string& text, const char* what) {
  const Int v = parse_int(text);
  if (v < std::numeric_limits<T>::min() || v > std::numeric_limits<T>::max()) {
    throw DomainError(std::string(what) + " = " + text + " is out of range");
  }
  if constexpr (std::is_signed_v<T>) {
    return static_cast<T>(*to_int64(v));
  } else {
    return static_cast<T>(*to_uint64(v));
  }
}

double parse_real(const std::string& text, const char* what) {
  double value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " = '" + text + "' is not a finite number");
  }
  return value;
}

Json form_json(const QuadraticForm& f) { return Json::array({f.a, f.b, f.c}); }

Json quad_json(const Int& d, const Options& opts, UnitCache* cache) {
  const QuadField field(d, opts.limits);
  const UnitMethod method = parse_method(opts.method);
  const UnitSignature sig = unit_signature(field, opts.limits, method);
  Json j;
  j["d"] = big(d);
  j["rank"] = quad_polya_rank(field, opts.limits, method);
  j["ramified"] = big_list(field.ramified());
  j["h1_rank"] = quad_h1_rank(field, opts.limits, method);
  if (sig.determined()) j["a_class"] = sig.a_options.front().to_string();
  if (method == UnitMethod::Auto || method == UnitMethod::FullUnit) {
    const QuadUnit u = cached_fundamental_unit(field, cache, opts.limits);
    j["unit"] = {{"x", big(u.x)}, {"y", big(u.y)}, {"norm", u.norm}};
  }
  return j;
}

Json oracle_json(const Int& d) {
  const OracleReport r = polya_oracle_report(d);
  Json j;
  j["d"] = big(r.d);
  j["discriminant"] = r.D;
  j["narrow_class_number"] = r.narrow_class_number;
  j["class_number"] = r.class_number;
  j["unit_norm"] = r.narrow_equals_wide ? -1 : 1;
  j["ramified"] = r.ramified;
  Json classes = Json::array();
  for (const auto& f : r.ramified_classes) classes.push_back(form_json(f));
  j["ramified_classes"] = classes;
  j["rank"] = r.rank;
  return j;
}

Json biquad_json(const Int& m, const Int& n, const Options& opts) {
  const BiquadField field(m, n, opts.limits);
  Json j;
  j["m"] = big(m);
  j["n"] = big(n);
  const auto d = field.radicands();
  j["subfields"] = big_list({d[0], d[1], d[2]});
  Json ram = Json::array();
  for (const auto& r : field.ramified()) ram.push_back({{"prime", big(r.prime)}, {"e", r.e}});
  j["ramified"] = ram;
  j["s"] = field.s();
  const UnitMethod method = parse_method(opts.method);
  j["h1_rank"] = h1_rank_biquad(field, opts.limits, method);
  j["rank"] = polya_rank_biquad(field, opts.limits, method);
  return j;
}

Json cubic_json(const Int& n, const Options& opts) {
  const SimplestCubic k = simplest_cubic(n, opts.limits);
  if (!k.squarefree) {
    throw Unsupported("h(" + to_string(n) + ") = " + to_string(k.hn) + " is not square-free");
  }
  Json j;
  j["n"] = big(n);
  j["h"] = big(k.hn);
  j["squarefree"] = k.squarefree;
  j["ramified"] = big_list(k.ramified);
  j["r_k"] = k.r_K;
  j["discriminant"] = big(k.hn * k.hn);
  j["polya_order"] = big(k.po_order);
  return j;
}

Json tuple_json(const TupleCertificate& c) {
  Json j;
  j["t"] = c.t;
  j["p"] = big(c.p);
  j["q"] = big(c.q);
  j["r"] = big_list(c.r);
  Json steps = Json::array();
  for (const auto& s : c.transcript) {
    Json system = Json::array();
    for (const auto& eq : s.system) {
      system.push_back({{"residue", big(eq.residue)}, {"modulus", big(eq.modulus)}});
    }
    steps.push_back({{"system", system},
                     {"non_residues", big_list(s.non_residues)},
                     {"solution", {{"x", big(s.solution.x)}, {"modulus", big(s.solution.modulus)}}},
                     {"prime", big(s.prime)}});
  }
  j["transcript"] = steps;
  j["search_bound"] = c.search_bound;
  return j;
}

Json biquad_report_json(const BiquadTheoremReport& r) {
  Json j;
  j["t"] = r.t;
  j["q"] = big(r.q);
  j["p"] = big(r.p);
  j["m"] = big(r.m);
  j["rank_kmp"] = r.rank_Kmp;
  j["rank_kmp_minus_1"] = r.rank_Kmp_minus_1;
  j["expected"] = r.expected;
  j["h1_structure_ok"] = r.h1_structure_ok;
  j["passed"] = r.passed;
  j["tuple"] = tuple_json(r.tuple);
  return j;
}

Json cubic_certificate_json(const CubicCertificate& c) {
  Json j;
  j["M"] = c.M;
  j["t"] = c.t;
  j["auxiliary_primes"] = big_list(c.auxiliary_primes);
  j["x0"] = big(c.x0);
  j["modulus"] = big(c.modulus);
  j["p"] = big(c.p);
  j["h"] = big(c.hn);
  Json factors = Json::array();
  for (const auto& pp : c.hn_factors.factors) factors.push_back(big(pp.prime));
  j["h_factors"] = factors;
  j["po_lower_bound"] = big(c.po_lower_bound);
  j["polya_order"] = big(power(Int(3), c.hn_factors.factors.size() - 1));
  j["terms_scanned"] = c.terms_scanned;
  j["verified"] = true;
  return j;
}

Json density_json(const DensityReport& r) {
  Json j;
  j["X"] = r.X;
  j["a"] = r.a;
  j["m"] = r.m;
  j["cutoff"] = r.cutoff;
  j["empirical"] = r.empirical;
  j["primes_in_ap"] = r.primes_in_ap;
  j["euler_c"] = r.euler_c;
  j["euler_c_lower"] = r.euler_c_lower;
  j["main_term"] = r.main_term;
  j["ratio"] = r.ratio;
  j["raw_ratio"] = r.raw_ratio;
  return j;
}

void emit(const Json& j, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << j.dump() << "\n";
    return;
  }
  std::string header, row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it != j.begin()) {
      header += '\t';
      row += '\t';
    }
    header += it.key();
    row += it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
  }
  out << header << "\n" << row << "\n";
}

int report_error(std::ostream& err, const char* kind, const std::exception& e, int code) {
  err << "error: " << kind << ": " << e.what() << "\n";
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polya groups of real quadratic, bi-quadratic and simplest cubic fields", "polya"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opts;
  bool tsv = false;
  app.add_flag("--json", "JSON output (default)");
  app.add_flag("--tsv", tsv, "Tab-separated output: a header line and a value line");
  app.add_option("--cache", opts.cache_path, "Fundamental unit cache file");
  app.add_option("--search-bound", opts.limits.search_bound,
                 "Progression terms examined per prime scan");
  app.add_option("--mr-rounds", opts.limits.mr_rounds, "Miller-Rabin rounds above 2^64");
  app.add_option("--cf-bound", opts.limits.cf_bound, "Continued-fraction step bound");

  std::string d, m, n, t, p, q, M, X, a, cutoff = "10000";

  auto* quad = app.add_subcommand("quad", "Polya rank and unit of Q(sqrt(d))");
  quad->add_option("--d", d, "Square-free radicand > 1")->required();
  quad->add_option("--method", opts.method, "auto | full | midpoint | genus");

  auto* oracle = app.add_subcommand("oracle", "Polya rank of Q(sqrt(d)) from form class groups");
  oracle->add_option("--d", d, "Square-free radicand > 1")->required();

  auto* biquad = app.add_subcommand("biquad", "Polya rank of Q(sqrt(m), sqrt(n))");
  biquad->add_option("--m", m)->required();
  biquad->add_option("--n", n)->required();
  biquad->add_option("--method", opts.method, "auto | full | midpoint | genus");

  auto* cubic = app.add_subcommand("cubic", "Simplest cubic field K_n");
  cubic->add_option("--n", n)->required();

  auto* tuple = app.add_subcommand("tuple", "Prime tuple r_1..r_t for p = 2q + 1");
  tuple->add_option("--t", t)->required();
  tuple->add_option("--p", p)->required();
  tuple->add_option("--q", q)->required();

  auto* verify_biquad = app.add_subcommand(
      "verify-biquad", "Check Po(K_{m,p-1}) and Po(K_{m,p}) have rank t - 1");
  verify_biquad->add_option("--t", t)->required();
  verify_biquad->add_option("--q", q)->required();

  auto* verify_cubic =
      app.add_subcommand("verify-cubic", "Certificate for a simplest cubic field with |Po| > M");
  verify_cubic->add_option("--M", M)->required();

  auto* density = app.add_subcommand("density", "Square-free values of h at primes = a (mod m)");
  density->add_option("--X", X)->required();
  density->add_option("--a", a)->required();
  density->add_option("--m", m)->required();
  density->add_option("--cutoff", cutoff);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUnsupportedInput;
  }
  opts.format = tsv ? Format::Tsv : Format::Json;

  try {
    std::unique_ptr<UnitCache> cache;
    if (!opts.cache_path.empty()) {
      cache = std::make_unique<UnitCache>(UnitCache::load(opts.cache_path, err));
    }
    int code = kOk;
    Json result;
    if (quad->parsed()) {
      result = quad_json(parse_int(d), opts, cache.get());
    } else if (oracle->parsed()) {
      result = oracle_json(parse_int(d));
    } else if (biquad->parsed()) {
      result = biquad_json(parse_int(m), parse_int(n), opts);
    } else if (cubic->parsed()) {
      result = cubic_json(parse_int(n), opts);
    } else if (tuple->parsed()) {
      result = tuple_json(crt_prime_tuple(parse_machine<unsigned>(t, "t"), parse_int(p),
                                          parse_int(q), opts.limits));
    } else if (verify_biquad->parsed()) {
      const auto report =
          verify_theorem_biquad(parse_machine<unsigned>(t, "t"), parse_int(q), opts.limits);
      result = biquad_report_json(report);
      if (!report.passed) code = kVerificationFailed;
    } else if (verify_cubic->parsed()) {
      result = cubic_certificate_json(verify_theorem_cubic(parse_real(M, "M"), opts.limits));
    } else if (density->parsed()) {
      result = density_json(density_report(
          parse_machine<std::uint32_t>(X, "X"), parse_machine<std::int64_t>(a, "a"),
          parse_machine<std::uint64_t>(m, "m"), parse_machine<std::uint32_t>(cutoff, "cutoff")));
    }
    emit(result, opts.format, out);
    if (code == kVerificationFailed) err << "error: verification failed\n";
    return code;
  } catch (const VerificationFailed& e) {
    return report_error(err, "verification failed", e, kVerificationFailed);
  } catch (const TotallyRamifiedTwo& e) {
    return report_error(err, "totally ramified 2", e, kUnsupportedInput);
  } catch (const Unsupported& e) {
    return report_error(err, "unsupported", e, kUnsupportedInput);
  } catch (const InvalidSophieGermain& e) {
    return report_error(err, "invalid Sophie Germain pair", e, kUnsupportedInput);
  } catch (const NonResidue& e) {
    return report_error(err, "non-residue", e, kUnsupportedInput);
  } catch (const NotInvertible& e) {
    return report_error(err, "not invertible", e, kUnsupportedInput);
  } catch (const NormMinusOne& e) {
    return report_error(err, "unit has norm -1", e, kUnsupportedInput);
  } catch (const DomainError& e) {
    return report_error(err, "domain", e, kUnsupportedInput);
  } catch (const SearchExhausted& e) {
    return report_error(err, "search exhausted", e, kSearchExhausted);
  } catch (const EffortExceeded& e) {
    return report_error(err, "effort exceeded", e, kSearchExhausted);
  } catch (const std::exception& e) {
    return report_error(err, "internal", e, kInternalError);
  }
}

}  // namespace polya::cli
