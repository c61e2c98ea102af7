// aci3: command-line front end. Exit codes: 0 valid/pass, 1 invalid/fail,
// 2 usage or I/O error, 3 inconclusive.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "aci3/aci.hpp"
#include "aci3/error.hpp"
#include "aci3/gorenstein.hpp"
#include "aci3/io/json_io.hpp"
#include "aci3/liaison.hpp"
#include "aci3/monomial.hpp"
#include "aci3/oracle/lab.hpp"
#include "aci3/sweep.hpp"

namespace {

using namespace aci3;
using io::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

struct SeedOptions {
  std::optional<std::uint64_t> seed;
  bool allow_env = false;

  std::uint64_t require() const {
    if (seed) return *seed;
    if (allow_env) {
      if (const char* env = std::getenv("ACI3_SEED")) {
        try {
          return std::stoull(env);
        } catch (const std::exception&) {
          throw UsageError(std::string("ACI3_SEED is not an integer: ") + env);
        }
      }
    }
    throw UsageError("randomized command needs --seed (or --allow-env-seed with ACI3_SEED set)");
  }
};

struct OracleOptions {
  std::uint32_t prime = oracle::kDefaultPrime;
  int samples = 4;
  int trials = 20;
  oracle::OracleLimits limits;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--p", prime, "prime field characteristic")->capture_default_str();
    cmd->add_option("--samples", samples, "pfaffian samples per degree sequence")
        ->capture_default_str();
    cmd->add_option("--trials", trials, "random trials per degree triple")->capture_default_str();
    cmd->add_option("--max-degree", limits.max_degree, "degree cap for graded pieces")
        ->capture_default_str();
    cmd->add_option("--max-entry", limits.max_entry, "largest degree accepted by min search")
        ->capture_default_str();
  }
};

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Valid: return kOk;
    case Verdict::Invalid: return kFail;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kFail;
}

std::unique_ptr<MinProvider> make_provider(const std::string& name, const OracleOptions& o,
                                           const SeedOptions& seed) {
  if (name == "ci") return std::make_unique<ClosedFormMinProvider>();
  if (name == "oracle") {
    return std::make_unique<oracle::ProbabilisticMinProvider>(
        o.samples, o.trials, seed.require(), oracle::PrimeField(o.prime), o.limits);
  }
  throw UsageError("unknown provider '" + name + "' (ci or oracle)");
}

json characterization_to_json(const CharacterizationResult& r) {
  json j = {{"verdict", to_string(r.verdict)}, {"reason", to_string(r.reason)},
            {"detail", r.detail}};
  j["m"] = r.m ? json(*r.m) : json(nullptr);
  if (r.tied_position != 0) j["tied_position"] = r.tied_position;
  return j;
}

// Maps library errors on user data to exit 1, malformed input to exit 2.
int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidArgument) return kUsage;
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti tables of codimension 3 almost complete intersections"};
  app.require_subcommand(1);
  SeedOptions seed;
  app.add_flag("--allow-env-seed", seed.allow_env, "use ACI3_SEED when --seed is absent");
  int exit_code = kOk;

  // check-gorenstein-degrees
  auto* cg = app.add_subcommand("check-gorenstein-degrees",
                                "validate a degree sequence and print its Gorenstein table");
  std::string cg_delta;
  cg->add_option("delta", cg_delta, "comma-separated degrees, e.g. 2,2,2,2,2")->required();
  cg->callback([&] {
    exit_code = guarded([&] {
      const auto delta = parse_int_list(cg_delta);
      try {
        const GorensteinShape shape = validate_degree_sequence(delta);
        json j = io::gorenstein_shape_to_json(shape);
        j["table"] = io::table_to_json(gorenstein_betti_table(shape));
        print(j);
        return kOk;
      } catch (const Error& e) {
        print({{"valid", false}, {"error", e.what()}});
        return kFail;
      }
    });
  });

  // analyze-betti
  auto* an = app.add_subcommand("analyze-betti", "read d*, s and t off an ACI Betti table");
  std::string an_path;
  an->add_option("table", an_path, "table JSON")->required();
  an->callback([&] {
    exit_code = guarded([&] {
      const BettiTable b = io::table_from_json(io::read_json_file(an_path));
      print(io::shape_to_json(decompose(b).shape));
      return kOk;
    });
  });

  // check-aci
  auto* ca = app.add_subcommand("check-aci", "evaluate the characterization conditions");
  std::string ca_path;
  std::string ca_provider = "ci";
  OracleOptions ca_oracle;
  ca->add_option("table", ca_path, "table JSON")->required();
  ca->add_option("--min-provider", ca_provider, "ci or oracle")->capture_default_str();
  ca->add_option("--seed", seed.seed, "seed for the oracle provider");
  ca_oracle.add_to(ca);
  ca->callback([&] {
    exit_code = guarded([&] {
      const BettiTable b = io::table_from_json(io::read_json_file(ca_path));
      const auto provider = make_provider(ca_provider, ca_oracle, seed);
      const CharacterizationResult r = check_table(b, *provider);
      json j = characterization_to_json(r);
      j["provider"] = provider->name();
      print(j);
      return verdict_exit(r.verdict);
    });
  });

  // link
  auto* ln = app.add_subcommand("link", "linked Gorenstein table inside a CI of type (d*,d2,d3)");
  std::string ln_path;
  ln->add_option("table", ln_path, "table JSON")->required();
  ln->callback([&] {
    exit_code = guarded([&] {
      const BettiTable b = io::table_from_json(io::read_json_file(ln_path));
      print(io::linked_to_json(link_aci_to_gorenstein(decompose(b))));
      return kOk;
    });
  });

  // mapping-cone
  auto* mc = app.add_subcommand("mapping-cone", "shift-level mapping cone of a link");
  std::string mc_g;
  std::string mc_k;
  int mc_dstar = 0;
  mc->add_option("--g", mc_g, "resolution of A_G (JSON)")->required();
  mc->add_option("--k", mc_k, "resolution of A_Z (JSON)")->required();
  mc->add_option("--dstar", mc_dstar, "degree of the extra generator")->required();
  mc->callback([&] {
    exit_code = guarded([&] {
      const BettiTable g = io::table_from_json(io::read_json_file(mc_g));
      const BettiTable k = io::table_from_json(io::read_json_file(mc_k));
      if (k.codim() < 1 || k.module(k.codim()).rank() != 1) {
        throw Error(ErrorCode::NotGorensteinTail, "K must end in a single twist");
      }
      const LinkContext ctx(k.module(k.codim()).min(), mc_dstar, k.codim());
      print(io::table_to_json(mapping_cone_resolution(g, k, ctx)));
      return kOk;
    });
  });

  // resolve-monomial
  auto* rm = app.add_subcommand("resolve-monomial", "Betti table of R/J for a monomial ideal J");
  std::string rm_path;
  rm->add_option("ideal", rm_path, "monomial ideal JSON")->required();
  rm->callback([&] {
    exit_code = guarded([&] {
      const MonomialIdeal3 ideal = io::monomial_ideal_from_json(io::read_json_file(rm_path));
      print(io::table_to_json(minimal_resolution_oracle(ideal)));
      return kOk;
    });
  });

  // realize / roundtrip share the realization step.
  auto realize_shape = [](const AciShape& shape) -> std::optional<MonomialIdeal3> {
    if (shape.t() == 2) return realize_t2(shape);
    if (shape.t() == 3) {
      const RealizeT3Result r = realize_t3(shape);
      if (!r.ideal) {
        std::cerr << "NotRealizable: " << r.failure->detail << '\n';
        return std::nullopt;
      }
      return r.ideal;
    }
    throw UsageError("monomial realization supports t = 2 or 3, got t=" +
                     std::to_string(shape.t()));
  };

  auto* rz = app.add_subcommand("realize", "monomial ideal with the given Betti table (t = 2, 3)");
  std::string rz_path;
  rz->add_option("table", rz_path, "table JSON")->required();
  rz->callback([&] {
    exit_code = guarded([&] {
      const BettiTable b = io::table_from_json(io::read_json_file(rz_path));
      const auto ideal = realize_shape(decompose(b).shape);
      if (!ideal) return kFail;
      print(io::monomial_ideal_to_json(*ideal));
      return kOk;
    });
  });

  auto* rt = app.add_subcommand("roundtrip", "analyze, realize, resolve and compare");
  std::string rt_path;
  rt->add_option("table", rt_path, "table JSON")->required();
  rt->callback([&] {
    exit_code = guarded([&] {
      const BettiTable b = io::table_from_json(io::read_json_file(rt_path));
      const auto ideal = realize_shape(decompose(b).shape);
      if (!ideal) return kFail;
      const BettiTable back = minimal_resolution_oracle(*ideal);
      const bool same = back == b;
      print({{"ideal", io::monomial_ideal_to_json(*ideal)["gens"]},
             {"table", io::table_to_json(back)},
             {"match", same}});
      return same ? kOk : kFail;
    });
  });

  // sweep
  auto* sw = app.add_subcommand("sweep", "exhaustive check over a monomial family (CSV)");
  std::string sw_kind;
  int sw_max = 3;
  std::string sw_only;
  std::string sw_out;
  std::string sw_provider = "ci";
  bool sw_serial = false;
  OracleOptions sw_oracle;
  sw->add_option("kind", sw_kind, "mont2 or mont3")->required();
  sw->add_option("--max-exponent", sw_max, "largest a_i (at most 6)")->capture_default_str();
  sw->add_option("--only", sw_only, "single tuple a1,a2,a3,b1,b2[,b3]");
  sw->add_option("-o,--output", sw_out, "write CSV here instead of stdout");
  sw->add_option("--min-provider", sw_provider, "ci or oracle")->capture_default_str();
  sw->add_option("--seed", seed.seed, "seed for the oracle provider");
  sw->add_flag("--serial", sw_serial, "use the serial reference loop");
  sw_oracle.add_to(sw);
  sw->callback([&] {
    exit_code = guarded([&] {
      SweepParams params;
      try {
        params.kind = sweep_kind_from_string(sw_kind);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      params.max_exponent = sw_max;
      if (!sw_only.empty()) {
        const auto v = parse_int_list(sw_only);
        const std::size_t want = params.kind == SweepKind::Mont2 ? 5 : 6;
        if (v.size() != want) throw UsageError("--only needs " + std::to_string(want) + " values");
        SweepTuple t{};
        std::copy(v.begin(), v.end(), t.begin());
        params.only = t;
      }
      const auto provider = make_provider(sw_provider, sw_oracle, seed);
      const SweepReport report = run_sweep(
          params, *provider, sw_serial ? oracle::Execution::Serial : oracle::Execution::Parallel);
      if (sw_out.empty()) {
        write_sweep_csv(std::cout, report);
      } else {
        std::ofstream out(sw_out);
        if (!out) throw UsageError("cannot write " + sw_out);
        write_sweep_csv(out, report);
      }
      std::cerr << "total " << report.total() << " pass " << report.pass << " fail "
                << report.fail << " inconclusive " << report.inconclusive << '\n';
      return report.fail > 0 ? kFail : kOk;
    });
  });

  // oracle ...
  auto* orc = app.add_subcommand("oracle", "finite-field computations");
  orc->require_subcommand(1);

  auto* ors = orc->add_subcommand("resolve", "minimal Betti table of R/I over F_p");
  std::string ors_path;
  int ors_bound = -1;
  OracleOptions ors_oracle;
  ors->add_option("ideal", ors_path, "ideal JSON")->required();
  ors->add_option("--bound", ors_bound, "degree bound (default: socle degree + 3)");
  ors_oracle.add_to(ors);
  ors->callback([&] {
    exit_code = guarded([&] {
      auto ideal = io::graded_ideal_from_json(io::read_json_file(ors_path),
                                              oracle::PrimeField(ors_oracle.prime),
                                              ors_oracle.limits);
      const BettiTable b = ors_bound < 0 ? oracle::minimal_resolution_fp(ideal)
                                         : oracle::minimal_resolution_fp(ideal, ors_bound);
      print(io::table_to_json(b));
      return kOk;
    });
  });

  auto* ocl = orc->add_subcommand("colon", "the ideal quotient (Z : Q) over F_p");
  std::string ocl_z;
  std::string ocl_q;
  int ocl_bound = -1;
  OracleOptions ocl_oracle;
  ocl->add_option("--z", ocl_z, "ideal Z (JSON)")->required();
  ocl->add_option("--q", ocl_q, "ideal Q (JSON)")->required();
  ocl->add_option("--bound", ocl_bound, "degree bound (default: degree cap)");
  ocl_oracle.add_to(ocl);
  ocl->callback([&] {
    exit_code = guarded([&] {
      const oracle::PrimeField field(ocl_oracle.prime);
      auto z = io::graded_ideal_from_json(io::read_json_file(ocl_z), field, ocl_oracle.limits);
      auto q = io::graded_ideal_from_json(io::read_json_file(ocl_q), field, ocl_oracle.limits);
      auto g = oracle::colon_ideal(z, q, ocl_bound < 0 ? ocl_oracle.limits.max_degree : ocl_bound);
      json j = io::graded_ideal_to_json(g);
      try {
        j["table"] = io::table_to_json(oracle::minimal_resolution_fp(g));
      } catch (const Error& e) {
        j["table"] = nullptr;
        j["table_error"] = e.what();
      }
      print(j);
      return kOk;
    });
  });

  auto* opf = orc->add_subcommand("pfaffian", "random Gorenstein ideal with generator degrees delta");
  std::string opf_delta;
  OracleOptions opf_oracle;
  opf->add_option("delta", opf_delta, "comma-separated degrees")->required();
  opf->add_option("--seed", seed.seed, "sampling seed");
  opf_oracle.add_to(opf);
  opf->callback([&] {
    exit_code = guarded([&] {
      auto ideal = oracle::pfaffian_gorenstein_sample(parse_int_list(opf_delta), seed.require(),
                                                      oracle::PrimeField(opf_oracle.prime),
                                                      opf_oracle.limits);
      json j = io::graded_ideal_to_json(ideal);
      j["table"] = io::table_to_json(oracle::minimal_resolution_fp(ideal));
      print(j);
      return kOk;
    });
  });

  auto* omd = orc->add_subcommand("min-delta", "probabilistic search for min(delta)");
  std::string omd_delta;
  OracleOptions omd_oracle;
  omd->add_option("delta", omd_delta, "comma-separated degrees")->required();
  omd->add_option("--seed", seed.seed, "sampling seed");
  omd_oracle.add_to(omd);
  omd->callback([&] {
    exit_code = guarded([&] {
      const GorensteinShape shape = validate_degree_sequence(parse_int_list(omd_delta));
      const oracle::ProbabilisticMinProvider provider(
          omd_oracle.samples, omd_oracle.trials, seed.require(),
          oracle::PrimeField(omd_oracle.prime), omd_oracle.limits);
      const auto m = provider.query(shape);
      json j = io::gorenstein_shape_to_json(shape);
      j["label"] = "probabilistic";
      j["min"] = m ? json(*m) : json(nullptr);
      if (const auto w = provider.witness(shape)) {
        json wj = json::array();
        for (const auto& f : *w) wj.push_back(io::polynomial_to_json(f));
        j["witness"] = wj;
      }
      print(j);
      return m ? kOk : kInconclusive;
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  return exit_code;
}
