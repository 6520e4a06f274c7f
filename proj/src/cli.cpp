// Copyright 2026 The qborn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qborn/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "qborn/datagen.hpp"
#include "qborn/errors.hpp"
#include "qborn/estimator.hpp"
#include "qborn/model.hpp"
#include "qborn/oracle.hpp"
#include "qborn/rng.hpp"
#include "qborn/stateprep.hpp"
#include "qborn/threads.hpp"

namespace qborn::cli {

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitDegenerate = 4;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Every output artifact gets a <path>.meta.json sidecar with the fully
/// resolved configuration; no timestamps, so reruns are byte-identical.
void write_sidecar(const std::string& artifact_path, json config) {
    config["tool"] = "qborn";
    config["version"] = kToolVersion;
    const std::string path = artifact_path + ".meta.json";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write sidecar: " + path);
    }
    out << config.dump(2) << "\n";
}

struct NoiseFlags {
    double p1 = 0.0;
    double p2 = 0.0;
    double readout = 0.0;
    double reset = 0.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--noise-1q", p1, "Depolarizing probability after 1-qubit gates");
        cmd->add_option("--noise-2q", p2, "Depolarizing probability after CNOTs");
        cmd->add_option("--noise-readout", readout, "Per-qubit readout flip probability");
        cmd->add_option("--noise-reset", reset, "Per-qubit reset X error probability");
    }
    bool any() const {
        return p1 != 0.0 || p2 != 0.0 || readout != 0.0 || reset != 0.0;
    }
    NoiseSpec spec() const {
        return NoiseSpec{p1, p2, readout, reset};
    }
    json to_json() const {
        return {{"p_depol_1q", p1}, {"p_depol_2q", p2}, {"p_readout_flip", readout},
                {"p_reset_error", reset}};
    }
};

std::shared_ptr<const FeatureMap> make_qfm(const std::string& kind, int dim, double gamma,
                                           int rff_dim, uint64_t seed) {
    if (kind == "sincos") {
        return std::make_shared<SinCosMap>(dim);
    }
    if (kind == "rff") {
        return std::make_shared<RffMap>(RffParams::sample(rff_dim, gamma, dim, seed));
    }
    throw ValidationError("unknown feature map kind: " + kind);
}

std::vector<std::vector<double>> grid_points_1d(double lo, double hi, int steps) {
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double t = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
        out.push_back({lo + t * (hi - lo)});
    }
    return out;
}

std::vector<std::vector<double>> grid_points_2d(double lo, double hi, int steps) {
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<size_t>(steps) * static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double x = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
        for (int j = 0; j < steps; ++j) {
            const double y = steps == 1 ? lo : lo + (hi - lo) * j / (steps - 1);
            out.push_back({x, y});
        }
    }
    return out;
}

int run_gen_data(const std::string& kind, const XorConfig& xor_cfg, const BiGaussConfig& bg_cfg,
                 const std::string& out_path) {
    json config;
    config["command"] = "gen-data";
    config["kind"] = kind;
    config["out"] = out_path;
    if (kind == "xor") {
        write_csv(out_path, gen_xor(xor_cfg));
        config["n_per_blob"] = xor_cfg.n_per_blob;
        config["blob_std"] = xor_cfg.blob_std;
        config["seed"] = xor_cfg.seed;
    } else {
        const std::vector<double> values = gen_bigaussian(bg_cfg);
        Dataset data;
        data.rows.reserve(values.size());
        for (double v : values) {
            data.rows.push_back({{v}, 0});
        }
        write_csv(out_path, data);
        config["n"] = bg_cfg.n;
        config["means"] = {bg_cfg.means[0], bg_cfg.means[1]};
        config["stds"] = {bg_cfg.stds[0], bg_cfg.stds[1]};
        config["weights"] = {bg_cfg.weights[0], bg_cfg.weights[1]};
        config["seed"] = bg_cfg.seed;
    }
    write_sidecar(out_path, config);
    return 0;
}

int run_fit(const std::string& data_path, const std::string& qfm_kind, double gamma, int rff_dim,
            const std::string& label_mode, uint64_t seed, const std::string& out_path) {
    const Dataset data = read_csv(data_path);
    const auto qfm = make_qfm(qfm_kind, data.dim(), gamma, rff_dim, seed);

    TrainedModel model{DatasetState{StateVector::zero_state(1), 0.0, 0, std::nullopt},
                       GateCircuit(1), qfm, std::nullopt, 0.0, 0};
    if (label_mode == "none") {
        model.dataset = build_dataset_state(data.feature_matrix(), *qfm);
    } else {
        if (!data.has_labels) {
            throw DataError(data_path + ": no 'label' column, required for a labeled fit");
        }
        const std::vector<int> labels = data.labels();
        const int num_classes = *std::max_element(labels.begin(), labels.end());
        if (num_classes < 2) {
            throw DataError(data_path + ": labeled fit needs at least two classes");
        }
        const LabelEncoding enc{label_mode == "one-hot" ? LabelKind::kOneHot : LabelKind::kBasis,
                                num_classes};
        model.dataset = build_labeled_state(data.feature_matrix(), labels, *qfm, enc);
        model.labels = enc;
    }
    PrepReport report = prepare_state(model.dataset.state);
    model.prep = std::move(report.circuit);
    model.prep_fidelity = report.fidelity;
    model.cnot_count = report.cnot_count;
    save_model(model, out_path);

    json config;
    config["command"] = "fit";
    config["data"] = data_path;
    config["qfm"] = qfm_kind;
    if (qfm_kind == "rff") {
        config["gamma"] = gamma;
        config["rff_dim"] = rff_dim;
    }
    config["labels"] = label_mode;
    config["seed"] = seed;
    config["out"] = out_path;
    write_sidecar(out_path, config);

    json summary;
    summary["model"] = out_path;
    summary["n_qubits"] = model.dataset.state.n_qubits();
    summary["n_samples"] = model.dataset.n_samples;
    summary["norm_constant"] = model.dataset.norm_constant;
    summary["cnot_count"] = model.cnot_count;
    summary["fidelity"] = model.prep_fidelity;
    std::cout << summary.dump() << "\n";
    return 0;
}

struct QuerySource {
    std::string queries_path;
    std::vector<double> grid;  // lo hi steps
};

std::vector<std::vector<double>> resolve_queries(const QuerySource& src, const TrainedModel& model,
                                                 std::vector<int>* labels_out) {
    const int dim = model.qfm->input_dim();
    if (!src.queries_path.empty()) {
        const Dataset q = read_csv(src.queries_path);
        if (q.dim() != dim) {
            throw DataError(src.queries_path + ": queries have " + std::to_string(q.dim()) +
                            " features, model expects " + std::to_string(dim));
        }
        if (labels_out != nullptr && q.has_labels) {
            *labels_out = q.labels();
        }
        return q.feature_matrix();
    }
    const double lo = src.grid[0];
    const double hi = src.grid[1];
    const int steps = static_cast<int>(src.grid[2]);
    if (steps < 2) {
        throw ValidationError("grid needs at least 2 steps");
    }
    if (dim == 1) {
        return grid_points_1d(lo, hi, steps);
    }
    if (dim == 2) {
        return grid_points_2d(lo, hi, steps);
    }
    throw ValidationError("grids are supported for 1- and 2-feature models only");
}

int run_density(const std::string& model_path, const QuerySource& src, bool exact, uint64_t shots,
                uint64_t seed, const NoiseFlags& noise, const std::string& kde_path,
                double kde_gamma_override, bool kde_unnormalized, bool rescale_pdf,
                const std::string& out_path) {
    const TrainedModel model = load_model(model_path);
    if (model.dataset.labeled()) {
        throw DataError("model " + model_path + " is a classifier: use `qborn classify`");
    }
    const std::vector<std::vector<double>> queries = resolve_queries(src, model, nullptr);
    const size_t n = queries.size();

    std::vector<DensityEstimate> estimates(n);
    const NoiseSpec noise_spec = noise.spec();
    noise_spec.validate();
#pragma omp parallel for schedule(dynamic) num_threads(max_threads()) if (n > 1)
    for (int64_t i = 0; i < static_cast<int64_t>(n); ++i) {
        const auto& x = queries[static_cast<size_t>(i)];
        if (exact) {
            estimates[static_cast<size_t>(i)] = density_exact(model.dataset, x, *model.qfm);
        } else {
            estimates[static_cast<size_t>(i)] =
                density_circuit(model.dataset, model.prep, model.qfm->map(x), shots,
                                derive_seed(seed, static_cast<uint64_t>(i)),
                                noise.any() ? &noise_spec : nullptr);
        }
    }

    // Optional pdf-scale view: divide by the trapezoid integral over the
    // (1-D, sorted) query grid so the curve integrates to 1.
    if (rescale_pdf) {
        if (model.qfm->input_dim() != 1 || !src.queries_path.empty()) {
            throw ValidationError("--rescale-pdf requires a 1-D --grid run");
        }
        double integral = 0.0;
        for (size_t i = 0; i + 1 < n; ++i) {
            const double h = queries[i + 1][0] - queries[i][0];
            integral += 0.5 * h * (estimates[i].value + estimates[i + 1].value);
        }
        if (integral <= 0.0) {
            throw DegeneracyError("--rescale-pdf: density integrates to zero on this grid");
        }
        for (auto& e : estimates) {
            e.value /= integral;
            e.std_error /= integral;
        }
    }

    std::optional<KdeConfig> kde_cfg;
    std::vector<std::vector<double>> kde_train;
    if (!kde_path.empty()) {
        double gamma = kde_gamma_override;
        if (gamma <= 0.0) {
            const auto* rff = dynamic_cast<const RffMap*>(model.qfm.get());
            if (rff == nullptr) {
                throw ValidationError(
                    "--kde-gamma is required when the model is not an RFF model");
            }
            gamma = rff->params().gamma;
        }
        kde_cfg = KdeConfig{gamma, !kde_unnormalized};
        kde_train = read_csv(kde_path).feature_matrix();
    }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw DataError("cannot open output file: " + out_path);
    }
    const int dim = model.qfm->input_dim();
    for (int d = 1; d <= dim; ++d) {
        out << "x" << d << ",";
    }
    out << "estimate,stderr,shots";
    if (kde_cfg.has_value()) {
        out << ",kde";
    }
    out << "\n";
    for (size_t i = 0; i < n; ++i) {
        for (double v : queries[i]) {
            out << fmt(v) << ",";
        }
        out << fmt(estimates[i].value) << "," << fmt(estimates[i].std_error) << ","
            << estimates[i].shots;
        if (kde_cfg.has_value()) {
            out << "," << fmt(kde(kde_train, queries[i], *kde_cfg));
        }
        out << "\n";
    }
    out.close();

    json config;
    config["command"] = "density";
    config["model"] = model_path;
    config["exact"] = exact;
    config["shots"] = exact ? 0 : shots;
    config["seed"] = seed;
    config["noise"] = noise.to_json();
    if (!src.queries_path.empty()) {
        config["queries"] = src.queries_path;
    } else {
        config["grid"] = {src.grid[0], src.grid[1], src.grid[2]};
    }
    config["rescale_pdf"] = rescale_pdf;
    if (kde_cfg.has_value()) {
        config["kde"] = {{"train", kde_path}, {"gamma", kde_cfg->gamma},
                         {"normalized", kde_cfg->normalized}};
    }
    config["out"] = out_path;
    write_sidecar(out_path, config);
    return 0;
}

int run_classify(const std::string& model_path, const QuerySource& src, bool exact, uint64_t shots,
                 uint64_t seed, const NoiseFlags& noise, const std::string& out_path) {
    const TrainedModel model = load_model(model_path);
    if (!model.dataset.labeled() || !model.labels.has_value()) {
        throw DataError("model " + model_path + " is a density model: use `qborn density`");
    }
    const LabelEncoding enc = *model.labels;
    const int K = enc.num_classes;
    std::vector<int> query_labels;
    const std::vector<std::vector<double>> queries = resolve_queries(src, model, &query_labels);
    const size_t n = queries.size();

    std::vector<ClassProbabilities> results(n);
    const NoiseSpec noise_spec = noise.spec();
    noise_spec.validate();
#pragma omp parallel for schedule(dynamic) num_threads(max_threads()) if (n > 1)
    for (int64_t i = 0; i < static_cast<int64_t>(n); ++i) {
        const auto& x = queries[static_cast<size_t>(i)];
        if (exact) {
            results[static_cast<size_t>(i)] = classify_exact(model.dataset, x, *model.qfm, enc);
        } else {
            results[static_cast<size_t>(i)] =
                classify_circuit(model.dataset, model.prep, model.qfm->map(x), enc, shots,
                                 derive_seed(seed, static_cast<uint64_t>(i)),
                                 noise.any() ? &noise_spec : nullptr);
        }
    }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw DataError("cannot open output file: " + out_path);
    }
    const int dim = model.qfm->input_dim();
    for (int d = 1; d <= dim; ++d) {
        out << "x" << d << ",";
    }
    for (int k = 1; k <= K; ++k) {
        out << "joint_" << k << ",";
    }
    for (int k = 1; k <= K; ++k) {
        out << "conditional_" << k << ",";
    }
    out << "predicted";
    if (!query_labels.empty()) {
        out << ",label";
    }
    out << "\n";
    for (size_t i = 0; i < n; ++i) {
        for (double v : queries[i]) {
            out << fmt(v) << ",";
        }
        for (double v : results[i].joint) {
            out << fmt(v) << ",";
        }
        for (double v : results[i].conditional) {
            out << fmt(v) << ",";
        }
        // Ties break to the lowest class index.
        int predicted = 1;
        for (int k = 2; k <= K; ++k) {
            if (results[i].conditional[static_cast<size_t>(k - 1)] >
                results[i].conditional[static_cast<size_t>(predicted - 1)]) {
                predicted = k;
            }
        }
        out << predicted;
        if (!query_labels.empty()) {
            out << "," << query_labels[i];
        }
        out << "\n";
    }
    out.close();

    json config;
    config["command"] = "classify";
    config["model"] = model_path;
    config["exact"] = exact;
    config["shots"] = exact ? 0 : shots;
    config["seed"] = seed;
    config["noise"] = noise.to_json();
    if (!src.queries_path.empty()) {
        config["queries"] = src.queries_path;
    } else {
        config["grid"] = {src.grid[0], src.grid[1], src.grid[2]};
    }
    config["out"] = out_path;

    // Labeled two-class queries get an AUC on the class-2 conditional.
    if (!query_labels.empty() && K == 2) {
        std::vector<double> scores(n);
        for (size_t i = 0; i < n; ++i) {
            scores[i] = results[i].conditional[1];
        }
        const double auc = roc_auc(scores, query_labels, 2);
        config["auc"] = auc;
        json summary;
        summary["auc"] = auc;
        summary["n_queries"] = n;
        std::cout << summary.dump() << "\n";
    }
    write_sidecar(out_path, config);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Optimization-free density estimation and classification on "
                 "a simulated quantum register"};
    app.require_subcommand(1);

    // gen-data
    auto* gen = app.add_subcommand("gen-data", "Generate a toy dataset CSV");
    std::string gen_kind;
    gen->add_option("kind", gen_kind, "Dataset kind")
        ->required()
        ->check(CLI::IsMember({"xor", "bigauss"}));
    XorConfig xor_cfg;
    BiGaussConfig bg_cfg;
    uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--n-per-blob", xor_cfg.n_per_blob, "XOR: samples per blob");
    gen->add_option("--blob-std", xor_cfg.blob_std, "XOR: blob standard deviation");
    gen->add_option("--n", bg_cfg.n, "bigauss: total samples");
    gen->add_option("--mean1", bg_cfg.means[0], "bigauss: first component mean");
    gen->add_option("--mean2", bg_cfg.means[1], "bigauss: second component mean");
    gen->add_option("--std1", bg_cfg.stds[0], "bigauss: first component std");
    gen->add_option("--std2", bg_cfg.stds[1], "bigauss: second component std");
    gen->add_option("--weight1", bg_cfg.weights[0], "bigauss: first component weight");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--out", gen_out, "Output CSV path")->required();

    // fit
    auto* fit = app.add_subcommand("fit", "Build a model from a CSV dataset");
    std::string fit_data;
    std::string fit_qfm = "sincos";
    double fit_gamma = 80.0;
    int fit_rff_dim = 8;
    std::string fit_labels = "none";
    uint64_t fit_seed = 0;
    std::string fit_out;
    fit->add_option("--data", fit_data, "Training CSV")->required();
    fit->add_option("--qfm", fit_qfm, "Feature map")->check(CLI::IsMember({"sincos", "rff"}));
    fit->add_option("--gamma", fit_gamma, "RFF kernel bandwidth");
    fit->add_option("--rff-dim", fit_rff_dim, "RFF feature count (power of two)");
    fit->add_option("--labels", fit_labels, "Label encoding")
        ->check(CLI::IsMember({"none", "basis", "one-hot"}));
    fit->add_option("--seed", fit_seed, "RNG seed (RFF parameter sampling)");
    fit->add_option("--out", fit_out, "Output model path")->required();

    // density
    auto* density = app.add_subcommand("density", "Estimate densities with a fitted model");
    std::string den_model;
    QuerySource den_src;
    bool den_exact = false;
    uint64_t den_shots = 1024;
    uint64_t den_seed = 0;
    NoiseFlags den_noise;
    std::string den_kde;
    double den_kde_gamma = 0.0;
    bool den_kde_unnorm = false;
    bool den_rescale = false;
    std::string den_out;
    density->add_option("--model", den_model, "Model path")->required();
    auto* den_queries = density->add_option("--queries", den_src.queries_path, "Query CSV");
    auto* den_grid =
        density->add_option("--grid", den_src.grid, "Grid: lo hi steps")->expected(3);
    den_queries->excludes(den_grid);
    auto* den_exact_flag = density->add_flag("--exact", den_exact, "Exact Born values");
    auto* den_shots_opt = density->add_option("--shots", den_shots, "Measurement shots per query");
    den_exact_flag->excludes(den_shots_opt);
    density->add_option("--seed", den_seed, "RNG seed");
    den_noise.attach(density);
    density->add_option("--compare-kde", den_kde, "Training CSV for a KDE comparison column");
    density->add_option("--kde-gamma", den_kde_gamma, "KDE bandwidth override");
    density->add_flag("--kde-unnormalized", den_kde_unnorm, "Drop the KDE pdf factor");
    density->add_flag("--rescale-pdf", den_rescale,
                      "Rescale estimates by their trapezoid integral over the grid");
    density->add_option("--out", den_out, "Output CSV path")->required();

    // classify
    auto* classify = app.add_subcommand("classify", "Classify queries with a fitted model");
    std::string cls_model;
    QuerySource cls_src;
    bool cls_exact = false;
    uint64_t cls_shots = 1024;
    uint64_t cls_seed = 0;
    NoiseFlags cls_noise;
    std::string cls_out;
    classify->add_option("--model", cls_model, "Model path")->required();
    auto* cls_queries = classify->add_option("--queries", cls_src.queries_path, "Query CSV");
    auto* cls_grid =
        classify->add_option("--grid", cls_src.grid, "Grid: lo hi steps (2-D)")->expected(3);
    cls_queries->excludes(cls_grid);
    auto* cls_exact_flag = classify->add_flag("--exact", cls_exact, "Exact Born values");
    auto* cls_shots_opt = classify->add_option("--shots", cls_shots, "Measurement shots per query");
    cls_exact_flag->excludes(cls_shots_opt);
    classify->add_option("--seed", cls_seed, "RNG seed");
    cls_noise.attach(classify);
    classify->add_option("--out", cls_out, "Output CSV path")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            return app.exit(e);
        }
        std::cerr << "qborn: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            if (gen_out.empty()) {
                throw ValidationError("--out must not be empty");
            }
            return run_gen_data(gen_kind, xor_cfg, bg_cfg, gen_out);
        }
        if (fit->parsed()) {
            return run_fit(fit_data, fit_qfm, fit_gamma, fit_rff_dim, fit_labels, fit_seed,
                           fit_out);
        }
        if (density->parsed()) {
            if (den_src.queries_path.empty() && den_src.grid.size() != 3) {
                throw ValidationError("density needs --queries or --grid");
            }
            if (!den_exact && den_shots < 1) {
                throw ValidationError("--shots must be >= 1");
            }
            const bool exact = den_exact || !den_shots_opt->count();
            return run_density(den_model, den_src, exact, den_shots, den_seed, den_noise, den_kde,
                               den_kde_gamma, den_kde_unnorm, den_rescale, den_out);
        }
        if (classify->parsed()) {
            if (cls_src.queries_path.empty() && cls_src.grid.size() != 3) {
                throw ValidationError("classify needs --queries or --grid");
            }
            if (!cls_exact && cls_shots < 1) {
                throw ValidationError("--shots must be >= 1");
            }
            const bool exact = cls_exact || !cls_shots_opt->count();
            return run_classify(cls_model, cls_src, exact, cls_shots, cls_seed, cls_noise,
                                cls_out);
        }
        std::cerr << "qborn: no subcommand given\n";
        return kExitUsage;
    } catch (const DegeneracyError& e) {
        std::cerr << "qborn: degeneracy error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const ValidationError& e) {
        std::cerr << "qborn: usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "qborn: data error: " << e.what() << "\n";
        return kExitData;
    } catch (const DimensionError& e) {
        std::cerr << "qborn: data error: " << e.what() << "\n";
        return kExitData;
    }
}

}  // namespace qborn::cli
