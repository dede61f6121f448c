// wireclass: batch pipeline for Wireshark packet-list exports.
// convert -> train -> evaluate/predict, plus weekly traffic reports.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wireclass/arff.hpp"
#include "wireclass/capture.hpp"
#include "wireclass/encoding.hpp"
#include "wireclass/evaluation.hpp"
#include "wireclass/report.hpp"
#include "wireclass/svm.hpp"
#include "wireclass/text.hpp"

namespace {

using namespace wireclass;

// Exit-code contract: 0 ok, 2 parse error, 3 I/O, 4 training failure,
// 5 schema mismatch between model and data.
constexpr int kExitParse = 2;
constexpr int kExitIo = 3;
constexpr int kExitTrain = 4;
constexpr int kExitSchema = 5;

struct GlobalFlags {
    bool json = false;
    bool quiet = false;
    std::optional<std::uint64_t> seed;
};

void note(const GlobalFlags& flags, const std::string& message) {
    if (!flags.quiet)
        std::cerr << message << '\n';
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open input file: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open output file: " + path);
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out = open_output(path);
    out << text;
    if (!out)
        throw IoError("failed writing " + path);
}

std::string file_stem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

bool has_extension(const std::string& path, const char* ext) {
    std::string e = std::filesystem::path(path).extension().string();
    return iequals(e, ext);
}

CaptureBatch parse_capture_file(const std::string& path, const ParseOptions& base,
                                const GlobalFlags& flags) {
    ParseOptions options = base;
    options.source_name = path;
    std::ifstream in = open_input(path);
    ParseReport report;
    CaptureBatch batch = parse_capture_csv(in, options, &report);
    for (const MalformedRow& row : report.malformed)
        note(flags, path + ":" + std::to_string(row.line) + ": skipped: " + row.reason);
    return batch;
}

// ARFF input for .arff files, capture CSV otherwise.
Dataset load_dataset(const std::string& path, const std::string& label,
                     const GlobalFlags& flags) {
    if (has_extension(path, ".arff")) {
        std::ifstream in = open_input(path);
        return parse_arff(in);
    }
    ParseOptions options;
    CaptureBatch batch = parse_capture_file(path, options, flags);
    batch.label = label.empty() ? file_stem(path) : label;
    return from_capture(batch);
}

std::string scheme_string(const TrainConfig& config) {
    std::ostringstream s;
    s << "wireclass svm -S 0 -K " << static_cast<int>(config.kernel.kind) << " -D "
      << config.kernel.degree << " -G " << double_to_string(config.kernel.gamma) << " -R "
      << double_to_string(config.kernel.coef0) << " -C " << double_to_string(config.c) << " -E "
      << double_to_string(config.tolerance);
    return s.str();
}

std::string test_mode_string(const SplitSpec& split, bool full) {
    if (full)
        return "evaluate on all instances";
    std::ostringstream s;
    std::string percent = double_to_string(split.train_percent);
    if (percent.find('.') == std::string::npos)
        percent += ".0";
    s << "split " << percent << "% train, remainder test";
    if (split.shuffle)
        s << " (shuffled, seed " << split.seed << ")";
    return s.str();
}

// Attribute names the pipeline actually consumes, in dataset order.
std::vector<std::string> used_attributes(const Dataset& d, const EncoderSpec& encoder) {
    std::vector<std::string> used;
    for (const Attribute& attr : d.attributes) {
        if (attr.name == encoder.class_attribute) {
            used.push_back(attr.name);
            continue;
        }
        for (const FeatureEncoding& f : encoder.features)
            if (f.attribute == attr.name) {
                used.push_back(attr.name);
                break;
            }
    }
    return used;
}

void print_run_information(std::ostream& out, const std::string& scheme,
                           const std::string& relation, std::size_t instances,
                           const std::vector<std::string>& attributes,
                           const std::string& test_mode) {
    out << "=== Run information ===\n\n";
    out << "Scheme:       " << scheme << '\n';
    out << "Relation:     " << relation << '\n';
    out << "Instances:    " << instances << '\n';
    out << "Attributes:   " << attributes.size() << '\n';
    for (const std::string& a : attributes)
        out << "              " << a << '\n';
    out << "Test mode:    " << test_mode << '\n';
}

// ---------------------------------------------------------------------------
// convert

struct ConvertArgs {
    std::vector<std::string> inputs;
    std::string output;
    std::string label;
    std::string relation;
    std::string remove;
    std::string header_mode = "auto";
    std::string delimiter = ",";
    bool skip_malformed = false;
    bool info_nominal = false;
};

int cmd_convert(const ConvertArgs& args, const GlobalFlags& flags) {
    ParseOptions options;
    if (args.delimiter.size() != 1)
        throw Error("--delimiter must be a single character");
    options.delimiter = args.delimiter[0];
    if (args.header_mode == "auto")
        options.header_mode = HeaderMode::auto_detect;
    else if (args.header_mode == "require")
        options.header_mode = HeaderMode::require;
    else if (args.header_mode == "none")
        options.header_mode = HeaderMode::none;
    else
        throw Error("--header must be auto, require, or none");
    options.skip_malformed = args.skip_malformed;

    std::vector<CaptureBatch> batches;
    for (const std::string& path : args.inputs)
        batches.push_back(parse_capture_file(path, options, flags));
    const std::string label = args.label.empty() ? file_stem(args.inputs.front()) : args.label;
    CaptureBatch merged = merge_batches(batches, label);
    note(flags, "parsed " + std::to_string(merged.records.size()) + " records from " +
                    std::to_string(batches.size()) + " file(s)");

    FromCaptureOptions conv;
    conv.info_nominal = args.info_nominal;
    Dataset d = from_capture(merged, conv);
    if (!args.relation.empty())
        d.relation = args.relation;
    if (!args.remove.empty())
        d = remove_attributes(d, parse_index_ranges(args.remove));

    if (args.output.empty() || args.output == "-") {
        write_arff(d, std::cout);
    } else {
        std::ofstream out = open_output(args.output);
        write_arff(d, out);
        note(flags, "wrote " + args.output);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// merge

struct MergeArgs {
    std::vector<std::string> inputs;
    std::string output;
    std::string label;
    bool no_header = false;
    bool skip_malformed = false;
};

int cmd_merge(const MergeArgs& args, const GlobalFlags& flags) {
    ParseOptions options;
    options.skip_malformed = args.skip_malformed;
    std::vector<CaptureBatch> batches;
    for (const std::string& path : args.inputs)
        batches.push_back(parse_capture_file(path, options, flags));
    const std::string label = args.label.empty() ? file_stem(args.inputs.front()) : args.label;
    CaptureBatch merged = merge_batches(batches, label);
    if (args.output.empty() || args.output == "-") {
        write_capture_csv(merged, std::cout, !args.no_header);
    } else {
        std::ofstream out = open_output(args.output);
        write_capture_csv(merged, out, !args.no_header);
        note(flags, "wrote " + std::to_string(merged.records.size()) + " records to " +
                        args.output);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// train

struct TrainArgs {
    std::string input;
    std::string output;
    std::string class_attribute = "Protocol";
    std::string remove;
    double split = 70.0;
    bool shuffle = false;
    std::string kernel = "rbf";
    double gamma = 0.0;
    int degree = 3;
    double coef0 = 0.0;
    double c = 1.0;
    double tolerance = 1e-3;
    long max_iterations = 10'000'000;
    std::size_t cache = 8'000'000;
    int threads = 1;
    std::string working_set = "second-order";
    std::size_t rare_min_support = 0;
    std::string rare_label = "__other__";
    bool no_scale = false;
};

int cmd_train(const TrainArgs& args, const GlobalFlags& flags) {
    Dataset d = load_dataset(args.input, "", flags);
    if (!args.remove.empty())
        d = remove_attributes(d, parse_index_ranges(args.remove));

    TrainConfig config;
    config.kernel.kind = kernel_kind_from_name(args.kernel);
    config.kernel.gamma = args.gamma;
    config.kernel.degree = args.degree;
    config.kernel.coef0 = args.coef0;
    config.c = args.c;
    config.tolerance = args.tolerance;
    config.max_iterations = args.max_iterations;
    config.cache_budget = args.cache;
    config.threads = args.threads;
    if (args.working_set == "second-order")
        config.working_set = WorkingSetRule::second_order;
    else if (args.working_set == "max-violating-pair")
        config.working_set = WorkingSetRule::max_violating_pair;
    else
        throw Error("--working-set must be second-order or max-violating-pair");
    if (flags.seed)
        config.seed = *flags.seed;

    SplitSpec split;
    split.train_percent = args.split;
    split.shuffle = args.shuffle;
    split.seed = flags.seed.value_or(1);

    FitOptions fit;
    fit.scale_numeric = !args.no_scale;
    if (args.rare_min_support > 0)
        fit.rare_bucket = RareBucket{args.rare_min_support, args.rare_label};

    std::vector<std::string> warnings;
    EncoderSpec encoder = fit_encoder(d, args.class_attribute, fit, &warnings);
    for (const std::string& w : warnings)
        note(flags, "warning: " + w);
    EncodedDataset encoded = encode(d, encoder);
    auto [train_side, test_side] = percentage_split(encoded, split);

    print_run_information(std::cout, scheme_string(config), d.relation, d.instances.size(),
                          used_attributes(d, encoder), test_mode_string(split, false));
    const KernelSpec resolved = resolve_gamma(config.kernel, encoded.features.cols());
    std::cout << "Kernel:       " << kernel_name(resolved.kind) << ", gamma "
              << double_to_string(resolved.gamma);
    if (config.kernel.gamma == 0.0)
        std::cout << " (auto = 1/" << encoded.features.cols() << ")";
    std::cout << ", degree " << resolved.degree << ", coef0 "
              << double_to_string(resolved.coef0) << "\n\n";

    SvmOvoModel model = train_ovo(train_side, config);
    model.split = split;

    std::size_t sv_total = 0;
    for (const SvmBinaryModel& b : model.binaries)
        sv_total += static_cast<std::size_t>(b.support_vectors.rows());
    std::cout << "=== Classifier model ===\n\n";
    std::cout << "one-vs-one C-SVC: " << model.label_names.size() << " classes, "
              << model.binaries.size() << " binary models, " << sv_total
              << " support vectors\n";
    note(flags, "Time taken to build model: " + std::to_string(model.train_seconds) +
                    " seconds");
    for (const PairTrainStats& stats : model.pair_stats)
        if (!stats.converged)
            note(flags, "warning: pair (" +
                            model.label_names[static_cast<std::size_t>(stats.positive_label)] +
                            ", " +
                            model.label_names[static_cast<std::size_t>(stats.negative_label)] +
                            ") hit the iteration cap; model is best-so-far");

    std::ofstream out = open_output(args.output);
    save_model(model, out);
    if (!out)
        throw IoError("failed writing model to " + args.output);
    note(flags, "wrote model " + args.output);
    return 0;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateArgs {
    std::string model_path;
    std::string data_path;
    std::optional<double> split;
    bool full = false;
    std::string output;
    std::string json_output;
};

int cmd_evaluate(const EvaluateArgs& args, const GlobalFlags& flags) {
    std::ifstream model_in = open_input(args.model_path);
    SvmOvoModel model = load_model(model_in);
    Dataset d = load_dataset(args.data_path, "", flags);

    SplitSpec split = model.split;
    if (args.split)
        split.train_percent = *args.split;
    if (flags.seed)
        split.seed = *flags.seed;

    EncodedDataset encoded = encode(d, model.encoder);
    const EncodedDataset* eval_side = &encoded;
    EncodedDataset test_side;
    if (!args.full) {
        auto [train_part, test_part] = percentage_split(encoded, split);
        test_side = std::move(test_part);
        eval_side = &test_side;
    }

    const auto started = std::chrono::steady_clock::now();
    std::vector<int> predicted = predict_rows(model, eval_side->features);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    std::vector<int> actual(predicted.size());
    for (std::size_t i = 0; i < actual.size(); ++i)
        actual[i] = eval_side->labels(static_cast<Index>(i));
    ConfusionMatrix matrix = confusion(actual, predicted, model.label_names);
    std::vector<std::int64_t> test_counts;
    for (Index r = 0; r < matrix.counts.rows(); ++r)
        test_counts.push_back(matrix.counts.row(r).sum());
    EvalSummary summary = summarize(matrix, model.train_priors, test_counts);
    note(flags, "Time taken to test model on test split: " + std::to_string(seconds) +
                    " seconds");

    RunInfo info;
    info.scheme = scheme_string(model.config);
    info.relation = d.relation;
    info.instances = d.instances.size();
    info.attributes = used_attributes(d, model.encoder);
    info.test_mode = test_mode_string(split, args.full);

    if (!args.json_output.empty() || flags.json) {
        nlohmann::ordered_json root;
        nlohmann::ordered_json run;
        run["scheme"] = info.scheme;
        run["relation"] = info.relation;
        run["instances"] = info.instances;
        run["attributes"] = info.attributes;
        run["test_mode"] = info.test_mode;
        if (!args.full)
            run["split_percent"] = split.train_percent;
        root["run"] = std::move(run);
        root["evaluation"] = eval_to_json(summary, matrix);
        const std::string json_text = root.dump(2) + "\n";
        if (!args.json_output.empty()) {
            write_text(args.json_output, json_text);
            note(flags, "wrote " + args.json_output);
        }
        if (flags.json)
            write_text(args.output, json_text);
    }
    if (!flags.json)
        write_text(args.output, format_report(summary, matrix, &info));
    return 0;
}

// ---------------------------------------------------------------------------
// predict

struct PredictArgs {
    std::string model_path;
    std::string data_path;
    std::string output;
};

int cmd_predict(const PredictArgs& args, const GlobalFlags& flags) {
    std::ifstream model_in = open_input(args.model_path);
    SvmOvoModel model = load_model(model_in);
    Dataset d = load_dataset(args.data_path, "", flags);
    std::vector<int> labels = predict(model, d);
    std::ostringstream out;
    for (int label : labels)
        out << model.label_names[static_cast<std::size_t>(label)] << '\n';
    write_text(args.output, out.str());
    note(flags, "predicted " + std::to_string(labels.size()) + " instances");
    return 0;
}

// ---------------------------------------------------------------------------
// report

struct ReportArgs {
    std::vector<std::string> inputs;
    std::vector<std::string> labels;
    std::size_t top_k = 0;  // 0 = unlimited
    std::string format = "text";
    std::string output;
    std::vector<std::string> eval_destination;  // LABEL=path.json
    std::vector<std::string> eval_protocol;
};

std::pair<std::string, std::string> split_label_path(const std::string& text,
                                                     const char* option) {
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size())
        throw Error(std::string(option) + " expects LABEL=PATH, got '" + text + "'");
    return {text.substr(0, eq), text.substr(eq + 1)};
}

int cmd_report(const ReportArgs& args, const GlobalFlags& flags) {
    std::vector<std::pair<std::string, Dataset>> batches;
    for (std::size_t i = 0; i < args.inputs.size(); ++i) {
        const std::string label =
            i < args.labels.size() ? args.labels[i] : file_stem(args.inputs[i]);
        batches.emplace_back(label, load_dataset(args.inputs[i], label, flags));
    }
    std::optional<std::size_t> top_k;
    if (args.top_k > 0)
        top_k = args.top_k;
    std::vector<TrafficReport> reports = weekly_report(batches, top_k);

    // Optional accuracy join from evaluate's JSON outputs.
    std::vector<WeekAccuracy> accuracy;
    auto week_entry = [&](const std::string& label) -> WeekAccuracy& {
        for (WeekAccuracy& w : accuracy)
            if (w.label == label)
                return w;
        accuracy.push_back({label, std::nullopt, std::nullopt, std::nullopt});
        return accuracy.back();
    };
    auto load_eval = [&](const std::string& spec_text, const char* option, bool destination) {
        auto [label, path] = split_label_path(spec_text, option);
        std::ifstream in = open_input(path);
        nlohmann::json j = nlohmann::json::parse(in, nullptr, true, true);
        WeekAccuracy& week = week_entry(label);
        const double value = j.at("evaluation").at("accuracy").get<double>();
        (destination ? week.destination_accuracy : week.protocol_accuracy) = value;
        if (j.contains("run") && j["run"].contains("split_percent"))
            week.split_percent = j["run"]["split_percent"].get<double>();
    };
    for (const std::string& e : args.eval_destination)
        load_eval(e, "--eval-destination", true);
    for (const std::string& e : args.eval_protocol)
        load_eval(e, "--eval-protocol", false);

    std::string format = args.format;
    if (flags.json)
        format = "json";
    std::string rendered;
    if (format == "text") {
        rendered = render_reports_text(reports, accuracy.empty() ? nullptr : &accuracy);
    } else if (format == "csv") {
        rendered = render_reports_csv(reports);
    } else if (format == "json") {
        rendered =
            reports_to_json(reports, accuracy.empty() ? nullptr : &accuracy).dump(2) + "\n";
    } else {
        throw Error("--format must be text, csv, or json");
    }
    write_text(args.output, rendered);
    return 0;
}

// ---------------------------------------------------------------------------

int dispatch(int argc, char** argv) {
    CLI::App app{"wireclass: SVM traffic classification over Wireshark packet-list exports"};
    app.require_subcommand(1);
    app.set_config("--config")->envname("WIRECLASS_CONFIG");

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "machine-readable JSON output where supported");
    app.add_flag("--quiet", flags.quiet, "suppress diagnostics on stderr");
    std::uint64_t seed_value = 0;
    CLI::Option* seed_opt =
        app.add_option("--seed", seed_value, "seed for shuffling and solver heuristics");

    ConvertArgs convert_args;
    CLI::App* convert = app.add_subcommand("convert", "capture CSV -> ARFF dataset");
    convert->fallthrough();
    convert->add_option("inputs", convert_args.inputs, "capture CSV exports")
        ->required()
        ->expected(-1);
    convert->add_option("-o,--output", convert_args.output, "output ARFF path (default stdout)");
    convert->add_option("--label", convert_args.label, "batch label (default: first file stem)");
    convert->add_option("--relation", convert_args.relation, "override the ARFF relation name");
    convert->add_option("--remove", convert_args.remove,
                        "1-based attribute positions to remove, e.g. 1-3,7");
    convert->add_option("--header", convert_args.header_mode,
                        "header handling: auto|require|none");
    convert->add_option("--delimiter", convert_args.delimiter, "field delimiter (default ,)");
    convert->add_flag("--skip-malformed", convert_args.skip_malformed,
                      "skip malformed rows and report them instead of failing");
    convert->add_flag("--info-nominal", convert_args.info_nominal,
                      "type the Info column nominal instead of string");

    MergeArgs merge_args;
    CLI::App* merge = app.add_subcommand("merge", "concatenate capture CSV exports");
    merge->fallthrough();
    merge->add_option("inputs", merge_args.inputs, "capture CSV exports")
        ->required()
        ->expected(-1);
    merge->add_option("-o,--output", merge_args.output, "output CSV path (default stdout)");
    merge->add_option("--label", merge_args.label, "batch label");
    merge->add_flag("--no-header", merge_args.no_header, "omit the header row");
    merge->add_flag("--skip-malformed", merge_args.skip_malformed,
                    "skip malformed rows instead of failing");

    TrainArgs train_args;
    CLI::App* train = app.add_subcommand("train", "train the one-vs-one SVM");
    train->fallthrough();
    train->add_option("input", train_args.input, "training data (.arff or capture .csv)")
        ->required();
    train->add_option("-o,--output", train_args.output, "model file path")->required();
    train->add_option("--class", train_args.class_attribute,
                      "class attribute name (default Protocol)");
    train->add_option("--remove", train_args.remove, "attribute positions to remove first");
    train->add_option("--split", train_args.split, "train percentage in (0,100), default 70");
    train->add_flag("--shuffle", train_args.shuffle, "shuffle before splitting (seeded)");
    train->add_option("--kernel", train_args.kernel, "linear|polynomial|rbf|sigmoid");
    train->add_option("--gamma", train_args.gamma, "kernel gamma; 0 = auto (1/#features)");
    train->add_option("--degree", train_args.degree, "polynomial degree");
    train->add_option("--coef0", train_args.coef0, "polynomial/sigmoid coef0");
    train->add_option("--c", train_args.c, "soft-margin box constraint C");
    train->add_option("--tolerance", train_args.tolerance, "KKT tolerance");
    train->add_option("--max-iterations", train_args.max_iterations, "SMO iteration cap");
    train->add_option("--cache", train_args.cache, "kernel cache budget in doubles");
    train->add_option("--threads", train_args.threads, "pairwise training threads");
    train->add_option("--working-set", train_args.working_set,
                      "second-order|max-violating-pair");
    train->add_option("--rare-min-support", train_args.rare_min_support,
                      "bucket nominal values seen fewer times (0 = off)");
    train->add_option("--rare-label", train_args.rare_label, "label for the rare bucket");
    train->add_flag("--no-scale", train_args.no_scale, "keep raw numeric features");

    EvaluateArgs evaluate_args;
    CLI::App* evaluate = app.add_subcommand("evaluate", "evaluate a model WEKA-style");
    evaluate->fallthrough();
    evaluate->add_option("model", evaluate_args.model_path, "model file")->required();
    evaluate->add_option("data", evaluate_args.data_path, "dataset (.arff or capture .csv)")
        ->required();
    double split_override = 0.0;
    CLI::Option* split_opt = evaluate->add_option(
        "--split", split_override, "override the train percentage stored in the model");
    evaluate->add_flag("--full", evaluate_args.full, "evaluate on all instances, no split");
    evaluate->add_option("-o,--output", evaluate_args.output, "report path (default stdout)");
    evaluate->add_option("--json-out", evaluate_args.json_output,
                         "also write the JSON rendering to this path");

    PredictArgs predict_args;
    CLI::App* predict_cmd = app.add_subcommand("predict", "print predicted labels");
    predict_cmd->fallthrough();
    predict_cmd->add_option("model", predict_args.model_path, "model file")->required();
    predict_cmd->add_option("data", predict_args.data_path, "dataset (.arff or capture .csv)")
        ->required();
    predict_cmd->add_option("-o,--output", predict_args.output, "output path (default stdout)");

    ReportArgs report_args;
    CLI::App* report = app.add_subcommand("report", "weekly traffic reports");
    report->fallthrough();
    report->add_option("inputs", report_args.inputs, "datasets (.arff or capture .csv)")
        ->required()
        ->expected(-1);
    report->add_option("--label", report_args.labels,
                       "batch labels, matched to inputs by position");
    report->add_option("--top-k", report_args.top_k, "rows per table (0 = all)");
    report->add_option("--format", report_args.format, "text|csv|json");
    report->add_option("-o,--output", report_args.output, "output path (default stdout)");
    report->add_option("--eval-destination", report_args.eval_destination,
                       "LABEL=eval.json accuracy join for the destination task");
    report->add_option("--eval-protocol", report_args.eval_protocol,
                       "LABEL=eval.json accuracy join for the protocol task");

    CLI11_PARSE(app, argc, argv);
    if (seed_opt->count() > 0)
        flags.seed = seed_value;
    if (split_opt->count() > 0)
        evaluate_args.split = split_override;

    const bool is_train = train->parsed();
    const bool is_eval_like = evaluate->parsed() || predict_cmd->parsed();
    try {
        if (convert->parsed())
            return cmd_convert(convert_args, flags);
        if (merge->parsed())
            return cmd_merge(merge_args, flags);
        if (train->parsed())
            return cmd_train(train_args, flags);
        if (evaluate->parsed())
            return cmd_evaluate(evaluate_args, flags);
        if (predict_cmd->parsed())
            return cmd_predict(predict_args, flags);
        if (report->parsed())
            return cmd_report(report_args, flags);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const SchemaMismatchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSchema;
    } catch (const UnseenNominalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_eval_like ? kExitSchema : kExitParse;
    } catch (const MalformedInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        for (const MalformedRow& row : e.rows())
            std::cerr << "  line " << row.line << ": " << row.reason << '\n';
        return kExitParse;
    } catch (const ArffSyntaxError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const EmptyInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const UnsupportedFeatureError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_train ? kExitTrain : kExitParse;
    } catch (const VersionMismatchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const CorruptModelError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const SingleClassError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTrain;
    } catch (const EmptyClassError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTrain;
    } catch (const NotNominalClassError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTrain;
    } catch (const UnknownAttributeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_train ? kExitTrain : kExitParse;
    } catch (const EmptyDatasetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_train ? kExitTrain : kExitParse;
    } catch (const DegenerateSplitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_train ? kExitTrain : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_train ? kExitTrain : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    return dispatch(argc, argv);
}
