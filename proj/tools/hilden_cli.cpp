#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace hilden;
using namespace hilden::cli;

int main(int argc, char** argv) {
  CLI::App app{"hilden: presentations, braids and homology for liftable Hilden groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "text", out_path;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  std::size_t budget = default_letter_budget;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", budget, "letter cap for the sphere oracle")->check(CLI::PositiveNumber);

  std::string group;
  std::size_t n = 0, k = 0;
  auto* verify = app.add_subcommand("verify", "verify every relator of a presentation");
  verify->add_option("--group", group, "lh|ph|ph1|prop-lh|intermediate-lh|sh|vw|lemmas")->required();
  verify->add_option("--n", n)->required();
  verify->add_option("--k", k);

  std::string n_range, k_range;
  auto* h1 = app.add_subcommand("h1", "first homology sweep");
  h1->add_option("--group", group)->required();
  h1->add_option("--n", n_range, "e.g. 1..10")->required();
  h1->add_option("--k", k_range, "e.g. 3..6");

  auto* braid = app.add_subcommand("braid", "braid word problem");
  braid->require_subcommand(1);
  std::vector<std::string> words, files;
  std::size_t strands = 0;
  bool        mcg     = false;
  auto*       eq      = braid->add_subcommand("eq", "compare two braids");
  auto*       nf      = braid->add_subcommand("nf", "left normal form");
  for (auto* sub : {eq, nf}) {
    sub->add_option("words", words, "words in the token grammar");
    sub->add_option("--file", files, "word file, one word per line");
    sub->add_option("--strands", strands);
    sub->add_option("--n", n, "enables s/r/t/rho/p/x/y tokens; strands default to 2n+2");
  }
  eq->add_flag("--mcg", mcg, "also compare in Mod_{0,m}");

  bool  dump      = false;
  auto* subgroups = app.add_subcommand("subgroups", "orders of W, V, VW, Soe, SoxSe");
  subgroups->add_option("--n", n)->required();
  subgroups->add_flag("--dump", dump, "list elements");

  std::string word;
  auto*       liftable = app.add_subcommand("liftable", "liftability of a braid word");
  liftable->add_option("--n", n)->required();
  liftable->add_option("word", word)->required();

  auto* exp = app.add_subcommand("export", "presentation as JSON");
  exp->add_option("--group", group)->required();
  exp->add_option("--n", n)->required();
  exp->add_option("--k", k);

  CLI11_PARSE(app, argc, argv);

  Result r;
  try {
    if (*verify) {
      r = cmd_verify(group, n, k, {jobs, budget});
    } else if (*h1) {
      r = cmd_h1(group, parse_range(n_range),
                 k_range.empty() ? std::vector<std::size_t>{} : parse_range(k_range));
    } else if (*braid) {
      for (auto const& f : files)
        for (auto& w : read_word_file(f)) words.push_back(w);
      auto ctx = braid_context(strands, n);
      if (*eq) {
        if (words.size() != 2) throw usage_error("braid eq takes exactly two words");
        r = cmd_braid_eq(words[0], words[1], ctx, mcg, budget);
      } else {
        if (words.empty()) throw usage_error("braid nf needs a word");
        r = cmd_braid_nf(words[0], ctx);
        for (std::size_t i = 1; i < words.size(); ++i)
          r.doc["rows"].push_back(cmd_braid_nf(words[i], ctx).doc["rows"][0]);
      }
    } else if (*subgroups) {
      r = cmd_subgroups(n, dump);
    } else if (*liftable) {
      r = cmd_liftable(word, n);
    } else if (*exp) {
      r = cmd_export(group, n, k);
    }
  } catch (usage_error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }

  std::string text = format == "json" ? r.doc.dump(2) + "\n" : render_text(r.doc);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return exit_usage;
    }
    f << text;
  }
  return r.exit_code;
}
