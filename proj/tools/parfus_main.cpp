#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "parfus/serialize.hpp"
#include "parfus/weak_hopf.hpp"

namespace fs = std::filesystem;
using namespace parfus;

namespace {

constexpr int kCacheVersion = 1;

struct Options {
  std::string group;
  std::string subgroup;
  std::string format = "json";
  std::string suite = "all";
  std::string cache_dir;
  bool no_cache = false;
  int cap = kDefaultCap;
};

struct Outcome {
  std::string text;
  int exit_code = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
  return v;
}

FiniteGroup parse_group_spec(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) {
    throw UsageError("group spec needs the form kind:arg "
                     "(cyclic:N | product:N1xN2[x...] | sym:N | file:PATH), got '" +
                     s + "'");
  }
  std::string kind = s.substr(0, colon);
  std::string arg = s.substr(colon + 1);
  try {
    if (kind == "cyclic") return make_cyclic(parse_int(arg));
    if (kind == "sym") return make_symmetric(parse_int(arg));
    if (kind == "product") {
      std::vector<int> ns;
      size_t pos = 0;
      while (pos <= arg.size()) {
        size_t x = arg.find('x', pos);
        if (x == std::string::npos) x = arg.size();
        ns.push_back(parse_int(arg.substr(pos, x - pos)));
        pos = x + 1;
      }
      if (ns.size() < 2) throw UsageError("product spec needs at least two factors");
      FiniteGroup g = make_direct_product(make_cyclic(ns[0]), make_cyclic(ns[1]));
      for (size_t i = 2; i < ns.size(); ++i) {
        g = make_direct_product(g, make_cyclic(ns[i]));
      }
      return g;
    }
    if (kind == "file") return load_group_file(arg);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("group spec '" + s + "': " + e.what());
  }
  throw UsageError("unknown group kind '" + kind + "'");
}

uint64_t parse_subgroup_spec(const FiniteGroup& g, const std::string& s) {
  if (s.rfind("gens:", 0) != 0) {
    throw UsageError("subgroup spec needs the form gens:i,j,... got '" + s + "'");
  }
  std::string arg = s.substr(5);
  std::vector<int> gens;
  size_t pos = 0;
  while (pos < arg.size()) {
    size_t c = arg.find(',', pos);
    if (c == std::string::npos) c = arg.size();
    int v = parse_int(arg.substr(pos, c - pos));
    if (v < 0 || v >= g.n) {
      throw UsageError("generator index " + std::to_string(v) +
                       " is outside the group (order " + std::to_string(g.n) + ")");
    }
    gens.push_back(v);
    pos = c + 1;
  }
  return subgroup_from_generators(g, gens).mask;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

[[noreturn]] void reject_format(const std::string& command, const std::string& format) {
  throw UsageError(format + " output is not available for '" + command +
                   "'; use json or md");
}

Outcome run_command(const std::string& command, const Options& opt) {
  FiniteGroup g = parse_group_spec(opt.group);
  if (g.n > opt.cap) {
    throw UsageError("group order " + std::to_string(g.n) + " exceeds the cap " +
                     std::to_string(opt.cap) + "; raise --cap if you mean it");
  }
  int cap = opt.cap;

  if (command == "info") {
    if (opt.format == "json") return {info_to_json(g, cap).dump(2) + "\n", 0};
    if (opt.format == "md") return {info_markdown(g, cap), 0};
    reject_format(command, opt.format);
  }

  if (command == "decompose") {
    if (opt.format == "json") return {decompose_to_json(g, cap).dump(2) + "\n", 0};
    if (opt.format == "md") return {decompose_markdown(g, cap), 0};
    return {decompose_csv(g, cap), 0};
  }

  if (command == "simples") {
    auto ctx = make_context(g, cap);
    if (opt.format == "json") return {simples_to_json(ctx).dump(2) + "\n", 0};
    if (opt.format == "md") return {simples_markdown(ctx), 0};
    return {simples_csv(ctx), 0};
  }

  if (command == "fusion") {
    auto ctx = make_context(g, cap);
    auto t = fusion_table(ctx);
    if (opt.format == "json") return {fusion_to_json(ctx, t).dump(2) + "\n", 0};
    if (opt.format == "md") return {fusion_table_markdown(ctx, t), 0};
    return {fusion_table_csv(ctx, t), 0};
  }

  if (command == "verify") {
    if (opt.format == "csv") reject_format(command, opt.format);
    auto want = [&](const char* s) { return opt.suite == s || opt.suite == "all"; };
    SuiteResults rs;
    if (want("foundations")) rs.emplace_back("foundations", verify_foundations(g, cap));
    if (want("blocks")) rs.emplace_back("blocks", verify_blocks(g, cap));
    if (want("simples")) rs.emplace_back("simples", verify_simples(g, cap));
    if (want("fusion")) rs.emplace_back("fusion", verify_fusion(g, cap));
    if (want("weakhopf")) {
      rs.emplace_back("weakhopf", verify_weak_hopf(g, cap));
      rs.emplace_back("weakhopf-words", verify_lambda_hopf_algebroid(g, cap));
    }
    if (opt.suite == "all") {
      rs.emplace_back("subgroup-functor", christmas_verify(g, cap));
      if (g.is_abelian()) rs.emplace_back("projection-functor", matryoshka_verify(g, cap));
    }
    bool pass = true;
    for (const auto& [name, rep] : rs) pass = pass && rep.all_pass();
    std::string text = opt.format == "json" ? suites_to_json(g, rs).dump(2) + "\n"
                                            : suites_markdown(g, rs);
    return {text, pass ? 0 : 1};
  }

  if (command == "christmas") {
    if (opt.format == "csv") reject_format(command, opt.format);
    uint64_t mask = parse_subgroup_spec(g, opt.subgroup);
    auto ctx = make_context(g, cap);
    auto img = christmas_images(ctx, Subgroup{&g, mask});
    if (opt.format == "json") return {christmas_to_json(g, img).dump(2) + "\n", 0};
    return {christmas_markdown(g, img), 0};
  }

  if (command == "matryoshka") {
    if (opt.format == "csv") reject_format(command, opt.format);
    if (!g.is_abelian()) {
      throw UsageError("the projection functor is defined for abelian groups; " + g.label +
                       " is not abelian");
    }
    uint64_t mask = parse_subgroup_spec(g, opt.subgroup);
    auto ctx = make_context(g, cap);
    auto md = matryoshka_functor(ctx, Subgroup{&g, mask});
    if (opt.format == "json") return {matryoshka_to_json(g, mask, md).dump(2) + "\n", 0};
    return {matryoshka_markdown(g, mask, md), 0};
  }

  throw UsageError("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in partial group algebras of finite groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", opt.group,
                    "group spec: cyclic:N | product:N1xN2[x...] | sym:N | file:PATH")
        ->required();
    sub->add_option("--format", opt.format, "output format (default json)")
        ->check(CLI::IsMember({"json", "md", "csv"}));
    sub->add_option("--cap", opt.cap, "largest allowed group order (default 16)");
    sub->add_option("--cache", opt.cache_dir, "cache directory (default $PARFUS_CACHE)");
    sub->add_flag("--no-cache", opt.no_cache, "disable the result cache");
  };

  add_common(app.add_subcommand("info", "basic counts: subsets, arrows, dimension, blocks"));
  add_common(app.add_subcommand("decompose", "block decomposition and matrix-algebra shape"));
  add_common(app.add_subcommand("simples", "catalog of simple module labels"));
  add_common(app.add_subcommand("fusion", "fusion table of the simple labels"));

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  add_common(c_verify);
  c_verify->add_option("--suite", opt.suite, "suite to run (default all)")
      ->check(CLI::IsMember({"foundations", "weakhopf", "blocks", "simples", "fusion", "all"}));

  auto* c_christmas =
      app.add_subcommand("christmas", "embed the irreducibles of a subgroup as simple labels");
  add_common(c_christmas);
  c_christmas->add_option("--subgroup", opt.subgroup, "subgroup spec: gens:i,j,...")
      ->required();

  auto* c_matryoshka = app.add_subcommand(
      "matryoshka", "pull the simple labels of a subgroup algebra back along the projection");
  add_common(c_matryoshka);
  c_matryoshka->add_option("--subgroup", opt.subgroup, "subgroup spec: gens:i,j,...")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (opt.cache_dir.empty()) {
    if (const char* env = std::getenv("PARFUS_CACHE")) opt.cache_dir = env;
  }
  bool use_cache = !opt.no_cache && !opt.cache_dir.empty();
  std::string key = "v" + std::to_string(kCacheVersion) + "|" + command + "|" + opt.group +
                    "|" + opt.subgroup + "|" + opt.suite + "|" + opt.format + "|" +
                    std::to_string(opt.cap);
  fs::path cache_file;
  if (use_cache) {
    cache_file = fs::path(opt.cache_dir) / (command + "-" + hex64(fnv1a(key)) + ".json");
    std::ifstream in(cache_file);
    if (in) {
      try {
        Json j;
        in >> j;
        if (j.value("key", "") == key) {
          std::cout << j.at("output").get<std::string>();
          return j.at("exit").get<int>();
        }
      } catch (const std::exception&) {
        // unreadable cache entry: fall through and recompute
      }
    }
  }

  Outcome out;
  try {
    out = run_command(command, opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (use_cache) {
    std::error_code ec;
    fs::create_directories(cache_file.parent_path(), ec);
    if (!ec) {
      Json j{{"version", kCacheVersion}, {"key", key}, {"exit", out.exit_code},
             {"output", out.text}};
      std::ofstream of(cache_file);
      of << j.dump(2) << "\n";
    }
  }

  std::cout << out.text;
  return out.exit_code;
}
