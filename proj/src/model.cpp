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

#include "qborn/model.hpp"

#include <fstream>

#include <json.hpp>

#include "qborn/errors.hpp"

namespace qborn {

namespace {

using nlohmann::json;

json qfm_to_json(const FeatureMap& qfm) {
    json j;
    j["kind"] = qfm.kind();
    j["dim"] = qfm.input_dim();
    if (const auto* rff = dynamic_cast<const RffMap*>(&qfm)) {
        const RffParams& p = rff->params();
        j["D"] = p.feature_count;
        j["gamma"] = p.gamma;
        j["seed"] = p.seed;
        j["w"] = p.w;
        j["b"] = p.b;
    }
    return j;
}

std::shared_ptr<const FeatureMap> qfm_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "sincos") {
        return std::make_shared<SinCosMap>(j.at("dim").get<int>());
    }
    if (kind == "rff") {
        RffParams p;
        p.feature_count = j.at("D").get<int>();
        p.gamma = j.at("gamma").get<double>();
        p.dim = j.at("dim").get<int>();
        p.seed = j.at("seed").get<uint64_t>();
        p.w = j.at("w").get<std::vector<std::vector<double>>>();
        p.b = j.at("b").get<std::vector<double>>();
        if (p.w.size() != static_cast<size_t>(p.feature_count) ||
            p.b.size() != static_cast<size_t>(p.feature_count)) {
            throw DataError("model document: RFF parameter arrays do not match D");
        }
        return std::make_shared<RffMap>(std::move(p));
    }
    throw DataError("model document: unknown feature map kind '" + kind + "'");
}

}  // namespace

std::string model_to_json(const TrainedModel& model) {
    json j;
    j["version"] = kModelFormat;
    j["n_qubits"] = model.dataset.state.n_qubits();
    json amps;
    std::vector<double> re(model.dataset.state.dim());
    std::vector<double> im(model.dataset.state.dim());
    for (uint64_t i = 0; i < model.dataset.state.dim(); ++i) {
        re[i] = model.dataset.state.amplitude(i).real();
        im[i] = model.dataset.state.amplitude(i).imag();
    }
    amps["re"] = re;
    amps["im"] = im;
    j["amplitudes"] = amps;
    j["norm_constant"] = model.dataset.norm_constant;
    j["n_samples"] = model.dataset.n_samples;
    if (model.dataset.split.has_value()) {
        j["split"] = {{"left", model.dataset.split->left_qubits},
                      {"right", model.dataset.split->right_qubits}};
    } else {
        j["split"] = nullptr;
    }
    j["qfm"] = qfm_to_json(*model.qfm);
    if (model.labels.has_value()) {
        j["labels"] = {{"kind", model.labels->kind == LabelKind::kOneHot ? "one_hot" : "basis"},
                       {"num_classes", model.labels->num_classes}};
    } else {
        j["labels"] = nullptr;
    }
    j["prep_circuit"] = to_text(model.prep);
    j["prep_fidelity"] = model.prep_fidelity;
    j["cnot_count"] = model.cnot_count;
    return j.dump(2) + "\n";
}

TrainedModel model_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("model document is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("version").get<std::string>() != kModelFormat) {
            throw DataError("model document version '" + j.at("version").get<std::string>() +
                            "' is not " + kModelFormat);
        }
        const auto re = j.at("amplitudes").at("re").get<std::vector<double>>();
        const auto im = j.at("amplitudes").at("im").get<std::vector<double>>();
        if (re.size() != im.size()) {
            throw DataError("model document: amplitude arrays differ in length");
        }
        std::vector<cdouble> amps(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            amps[i] = cdouble{re[i], im[i]};
        }
        std::optional<SubsystemSplit> split;
        if (!j.at("split").is_null()) {
            split = SubsystemSplit{j.at("split").at("left").get<int>(),
                                   j.at("split").at("right").get<int>()};
        }
        DatasetState dataset{StateVector(std::move(amps)),
                             j.at("norm_constant").get<double>(),
                             j.at("n_samples").get<uint64_t>(), split};
        TrainedModel model{std::move(dataset), circuit_from_text(j.at("prep_circuit").get<std::string>()),
                           qfm_from_json(j.at("qfm")), std::nullopt,
                           j.at("prep_fidelity").get<double>(), j.at("cnot_count").get<int>()};
        if (!j.at("labels").is_null()) {
            const std::string kind = j.at("labels").at("kind").get<std::string>();
            if (kind != "one_hot" && kind != "basis") {
                throw DataError("model document: unknown label encoding '" + kind + "'");
            }
            model.labels = LabelEncoding{kind == "one_hot" ? LabelKind::kOneHot : LabelKind::kBasis,
                                         j.at("labels").at("num_classes").get<int>()};
        }
        return model;
    } catch (const json::exception& e) {
        throw DataError(std::string("model document is missing fields: ") + e.what());
    }
}

void save_model(const TrainedModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot open model file for writing: " + path);
    }
    out << model_to_json(model);
    if (!out) {
        throw DataError("failed writing model file: " + path);
    }
}

TrainedModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open model file: " + path);
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return model_from_json(text);
}

}  // namespace qborn
