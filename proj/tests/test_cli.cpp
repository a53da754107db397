#include <sys/wait.h>

#include <cstdlib>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "topomap/dataset.hpp"
#include "topomap/generators.hpp"
#include "topomap/graph_io.hpp"
#include "topomap/io_util.hpp"
#include "topomap/model_io.hpp"

// Drives the installed binary end to end: every command, every exit-code
// family, and byte determinism of the artifacts it writes.

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const testutil::TempDir& tmp, const std::string& args) {
  const std::string out_path = tmp.file("stdout.txt").string();
  const std::string err_path = tmp.file("stderr.txt").string();
  const std::string command = std::string("\"") + TOPOMAP_CLI_PATH + "\" " + args + " > " +
                              out_path + " 2> " + err_path;
  const int status = std::system(command.c_str());
  CliResult result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = topomap::read_text_file(out_path);
  result.err = topomap::read_text_file(err_path);
  return result;
}

std::string quoted(const std::filesystem::path& p) { return "\"" + p.string() + "\""; }

// A 4-dimensional hand-built model: one neuron sits exactly on the complete
// graph spectrum {3,-1,-1,-1}, the other far away, so classification of K4 is
// forced.
std::string crafted_model_text() {
  return "topomap-model 1\n"
         "space FINE\n"
         "neurons 2\n"
         "dim 4\n"
         "seed 0\n"
         "epochs 1\n"
         "alpha0 0.5\n"
         "alpha_min 0.01\n"
         "sigma0 3\n"
         "sigma_min 0.25\n"
         "init_jitter 0.0001\n"
         "final_qe 0\n"
         "neuron 0 0 0 REG3 3 -1 -1 -1\n"
         "neuron 1 1 0 RANDOM 20 0 0 -20\n";
}

std::string k4_graph_text() { return "n=4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"; }

const std::string kTinyGen = "gen --seed 5 --nodes 8 --counts 2,1,1,2,2 --p 0.4 --m 2";

}  // namespace

TEST_CASE("cli rejects empty and malformed invocations with exit 1") {
  testutil::TempDir tmp("cli");
  REQUIRE(run_cli(tmp, "").code == 1);
  REQUIRE(run_cli(tmp, "frobnicate").code == 1);
  REQUIRE(run_cli(tmp, "gen").code == 1);                       // missing --out
  REQUIRE(run_cli(tmp, "gen --out x.csv --nodes 0").code == 1); // positivity check
  REQUIRE(run_cli(tmp, "train --data x.csv").code == 1);        // missing --out
  REQUIRE(run_cli(tmp, "--help").code == 0);
  REQUIRE(run_cli(tmp, "gen --help").code == 0);
}

TEST_CASE("cli gen writes a parseable dataset, byte-stable under reruns") {
  testutil::TempDir tmp("cli");
  const auto a = tmp.file("a.csv");
  const auto b = tmp.file("b.csv");

  const CliResult first = run_cli(tmp, kTinyGen + " --out " + quoted(a));
  REQUIRE(first.code == 0);
  REQUIRE(first.out.find("wrote 8 patterns") != std::string::npos);
  REQUIRE(first.out.find("connected per class:") != std::string::npos);

  REQUIRE(run_cli(tmp, kTinyGen + " --out " + quoted(b)).code == 0);
  REQUIRE(topomap::read_text_file(a) == topomap::read_text_file(b));

  const topomap::Dataset ds = topomap::read_dataset_csv(a);
  REQUIRE(ds.n == 8);
  REQUIRE(ds.records.size() == 8);
}

TEST_CASE("cli gen reports infeasible requests as usage errors") {
  testutil::TempDir tmp("cli");
  const auto out = tmp.file("x.csv");
  // 5-regular graphs on 4 nodes cannot exist
  const CliResult r = run_cli(tmp, "gen --seed 1 --nodes 4 --counts 0,0,1,0,0 --out " + quoted(out));
  REQUIRE(r.code == 1);
  REQUIRE_FALSE(r.err.empty());

  REQUIRE(run_cli(tmp, "gen --counts 1,2,3 --out " + quoted(out)).code == 1);
}

TEST_CASE("cli train/eval/classify/project cover the happy path") {
  testutil::TempDir tmp("cli");
  const auto data = tmp.file("train.csv");
  const auto model = tmp.file("map.som");
  const auto qe = tmp.file("qe.csv");

  REQUIRE(run_cli(tmp, kTinyGen + " --out " + quoted(data)).code == 0);

  const std::string train_args = "train --data " + quoted(data) + " --out " + quoted(model) +
                                 " --qe-log " + quoted(qe) + " --epochs 40 --neurons 6 --seed 3";
  const CliResult trained = run_cli(tmp, train_args);
  REQUIRE(trained.code == 0);
  REQUIRE(trained.out.find("trained 6 neurons for 40 epochs (seed 3)") != std::string::npos);
  REQUIRE(trained.out.find("quantization error: initial ") != std::string::npos);
  REQUIRE(trained.out.find("wrote model to ") != std::string::npos);
  const std::string qe_text = topomap::read_text_file(qe);
  REQUIRE(topomap::split_lines(qe_text).size() == 42);
  REQUIRE(topomap::read_model(model).som.dim() == 8);

  // byte determinism of the model artifact
  const auto model2 = tmp.file("map2.som");
  REQUIRE(run_cli(tmp, "train --data " + quoted(data) + " --out " + quoted(model2) +
                           " --epochs 40 --neurons 6 --seed 3")
              .code == 0);
  REQUIRE(topomap::read_text_file(model) == topomap::read_text_file(model2));

  // eval, default macro space
  const auto confusion = tmp.file("confusion.csv");
  const CliResult eval = run_cli(tmp, "eval --model " + quoted(model) + " --data " + quoted(data) +
                                          " --out " + quoted(confusion));
  REQUIRE(eval.code == 0);
  REQUIRE(eval.out.find("space: MACRO\n") != std::string::npos);
  REQUIRE(eval.out.find("samples: 8\n") != std::string::npos);
  const auto purity_at = eval.out.find("purity: ");
  REQUIRE(purity_at != std::string::npos);
  const std::string purity_line = eval.out.substr(purity_at + 8, eval.out.find('\n', purity_at) - purity_at - 8);
  double purity = -1.0;
  REQUIRE(topomap::parse_double(purity_line, purity));
  REQUIRE(purity >= 0.0);
  REQUIRE(purity <= 1.0);
  REQUIRE(topomap::read_text_file(confusion).substr(0, 11) == "truth\\pred,");

  const CliResult eval_fine = run_cli(tmp, "eval --model " + quoted(model) + " --data " +
                                               quoted(data) + " --space FINE");
  REQUIRE(eval_fine.code == 0);
  REQUIRE(eval_fine.out.find("space: FINE\n") != std::string::npos);

  REQUIRE(run_cli(tmp, "eval --model " + quoted(model) + " --data " + quoted(data) +
                           " --space BLOB")
              .code == 1);

  // classify an 8-node probe in both spaces
  const auto probe = tmp.file("probe.graph");
  topomap::write_graph_file(probe, topomap::gen_regular(8, 4, 9));
  const CliResult macro = run_cli(tmp, "classify --model " + quoted(model) + " --graph " + quoted(probe));
  REQUIRE(macro.code == 0);
  const std::vector<std::string> macro_names{"REGULAR\n", "RANDOM\n", "SCALEFREE\n"};
  bool macro_ok = false;
  for (const auto& name : macro_names) macro_ok = macro_ok || macro.out == name;
  REQUIRE(macro_ok);

  // projection artifacts
  const auto proj = tmp.file("proj.csv");
  const auto svg = tmp.file("proj.svg");
  const CliResult projected = run_cli(tmp, "project --model " + quoted(model) + " --data " +
                                               quoted(data) + " --out " + quoted(proj) +
                                               " --svg " + quoted(svg));
  REQUIRE(projected.code == 0);
  REQUIRE(projected.out.find("wrote 14 projection records") != std::string::npos);
  const std::string proj_text = topomap::read_text_file(proj);
  const auto proj_lines = topomap::split_lines(proj_text);
  REQUIRE(proj_lines.size() == 15);
  REQUIRE(proj_lines[0] == "kind,id,label,x,y");
  REQUIRE(topomap::read_text_file(svg).substr(0, 4) == "<svg");
}

TEST_CASE("cli classify --spectrum-only prints the known diamond spectrum") {
  testutil::TempDir tmp("cli");
  const auto graph = tmp.file("diamond.graph");
  topomap::write_graph_file(graph, testutil::diamond_graph());

  const CliResult r = run_cli(tmp, "classify --spectrum-only --graph " + quoted(graph));
  REQUIRE(r.code == 0);
  std::vector<double> values;
  for (const auto& tok : topomap::split(topomap::split_lines(r.out)[0], ' ')) {
    double v = 0.0;
    REQUIRE(topomap::parse_double(tok, v));
    values.push_back(v);
  }
  REQUIRE(testutil::max_abs_diff(values, testutil::diamond_spectrum()) < 1e-9);
}

TEST_CASE("cli classify on a crafted model is fully deterministic") {
  testutil::TempDir tmp("cli");
  const auto model = tmp.file("crafted.som");
  const auto graph = tmp.file("k4.graph");
  topomap::write_text_file(model, crafted_model_text());
  topomap::write_text_file(graph, k4_graph_text());

  const CliResult fine = run_cli(tmp, "classify --model " + quoted(model) + " --graph " +
                                          quoted(graph) + " --space FINE");
  REQUIRE(fine.code == 0);
  REQUIRE(fine.out == "REG3\n");

  const CliResult macro = run_cli(tmp, "classify --model " + quoted(model) + " --graph " +
                                           quoted(graph) + " --space MACRO");
  REQUIRE(macro.code == 0);
  REQUIRE(macro.out == "REGULAR\n");

  // without --spectrum-only a model is mandatory
  REQUIRE(run_cli(tmp, "classify --graph " + quoted(graph)).code == 1);
}

TEST_CASE("cli maps data failures to exit 2") {
  testutil::TempDir tmp("cli");
  const auto model = tmp.file("crafted.som");
  const auto graph = tmp.file("k4.graph");
  const auto missing = tmp.file("does-not-exist");
  topomap::write_text_file(model, crafted_model_text());
  topomap::write_text_file(graph, k4_graph_text());

  // missing files
  REQUIRE(run_cli(tmp, "train --data " + quoted(missing) + " --out " + quoted(tmp.file("m"))).code == 2);
  REQUIRE(run_cli(tmp, "classify --model " + quoted(model) + " --graph " + quoted(missing)).code == 2);

  // node-count mismatch: 8-node probe against the 4-dimensional model
  const auto probe = tmp.file("probe.graph");
  topomap::write_graph_file(probe, topomap::gen_regular(8, 3, 1));
  REQUIRE(run_cli(tmp, "classify --model " + quoted(model) + " --graph " + quoted(probe)).code == 2);

  // malformed graph file
  const auto bad = tmp.file("bad.graph");
  topomap::write_text_file(bad, "n=4\n0 9\n");
  const CliResult r = run_cli(tmp, "classify --spectrum-only --graph " + quoted(bad));
  REQUIRE(r.code == 2);
  REQUIRE(r.err.find("bad.graph:2") != std::string::npos);
}

TEST_CASE("cli maps numeric failures to exit 3") {
  testutil::TempDir tmp("cli");
  const auto model = tmp.file("crafted.som");
  const auto data = tmp.file("flat.csv");
  const auto out = tmp.file("proj.csv");
  topomap::write_text_file(model, crafted_model_text());

  // three identical signatures: no 2-D structure to project onto
  std::string csv = topomap::dataset_csv_header(4) + "\n";
  for (int i = 0; i < 3; ++i)
    csv += std::to_string(i) + ",REG3,regular r=3,3,-1,-1,-1\n";
  topomap::write_text_file(data, csv);

  const CliResult r = run_cli(tmp, "project --model " + quoted(model) + " --data " + quoted(data) +
                                       " --out " + quoted(out));
  REQUIRE(r.code == 3);
  REQUIRE_FALSE(r.err.empty());
}
