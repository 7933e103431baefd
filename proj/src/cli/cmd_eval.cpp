#include "commands.hpp"

#include <invmark/cli.hpp>
#include <invmark/error.hpp>
#include <invmark/eval.hpp>
#include <invmark/log.hpp>
#include <invmark/png_io.hpp>

#include <algorithm>
#include <cstdio>
#include <memory>
#include <ostream>

namespace invmark::cli {

namespace {

namespace fs = std::filesystem;

struct EvalOptions {
    std::string a;
    std::string b;
    std::string ref;
    std::string out;
    std::vector<int> labels;
    bool csv = false;
};

std::vector<std::string> png_names(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw MissingFile(dir);
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".png") names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    return names;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

int run_eval(const EvalOptions& o, std::ostream& out) {
    if (!o.b.empty() && !o.ref.empty()) throw InvalidArgument("give either --b or --ref, not both");

    const auto names_a = png_names(o.a);
    std::vector<LabelMask> masks_a;
    for (const auto& n : names_a) masks_a.push_back(io::read_mask_png(fs::path(o.a) / n));

    // One row per compared pair of masks: (name, label, iou).
    std::vector<std::tuple<std::string, int, double>> rows;
    std::string kind;
    std::vector<LabelMask> masks_b;
    std::vector<std::string> names;
    LabelMask reference;

    if (!o.b.empty()) {
        kind = "paired";
        const auto names_b = png_names(o.b);
        for (const auto& n : names_a) {
            if (!std::binary_search(names_b.begin(), names_b.end(), n)) {
                log::warn(n + " has no counterpart in " + o.b);
                continue;
            }
            names.push_back(n);
            masks_b.push_back(io::read_mask_png(fs::path(o.b) / n));
        }
        if (names.empty()) throw InvalidArgument("no mask file names are shared by --a and --b");
        std::vector<LabelMask> kept;
        for (std::size_t i = 0; i < names_a.size(); ++i)
            if (std::binary_search(names.begin(), names.end(), names_a[i])) kept.push_back(masks_a[i]);
        masks_a = std::move(kept);
    } else if (!o.ref.empty()) {
        kind = "reference";
        reference = io::read_mask_png(o.ref);
        names = names_a;
        if (masks_a.empty()) throw InvalidArgument("no masks found in " + o.a);
    } else {
        kind = "pairwise";
        names = names_a;
        if (masks_a.size() < 2) throw InvalidArgument("pairwise agreement needs at least two masks in " + o.a);
    }

    std::vector<std::uint8_t> labels;
    if (o.labels.empty()) {
        std::vector<LabelMask> all = masks_a;
        all.insert(all.end(), masks_b.begin(), masks_b.end());
        if (kind == "reference") all.push_back(reference);
        labels = eval::labels_present(all);
    } else {
        for (int l : o.labels) labels.push_back(static_cast<std::uint8_t>(l));
    }

    nlohmann::json per_label = nlohmann::json::object();
    for (auto label : labels) {
        eval::AgreementStats st;
        if (kind == "paired") {
            std::vector<double> v;
            for (std::size_t i = 0; i < masks_a.size(); ++i) {
                v.push_back(eval::iou(masks_a[i], masks_b[i], label));
                rows.emplace_back(names[i], label, v.back());
            }
            st = eval::summarize(v);
        } else if (kind == "reference") {
            st = eval::reference_agreement(masks_a, reference, label);
            for (std::size_t i = 0; i < masks_a.size(); ++i)
                rows.emplace_back(names[i], label, eval::iou(masks_a[i], reference, label));
        } else {
            st = eval::agreement_stats(masks_a, label);
            for (std::size_t i = 0; i < masks_a.size(); ++i)
                for (std::size_t j = i + 1; j < masks_a.size(); ++j)
                    rows.emplace_back(names[i] + "|" + names[j], label, eval::iou(masks_a[i], masks_a[j], label));
        }
        per_label[std::to_string(label)] = {{"mean", st.mean}, {"std", st.std}, {"n_pairs", st.n_pairs}};
    }

    const nlohmann::json report = {{"kind", kind}, {"n_masks", masks_a.size()}, {"per_label", std::move(per_label)}};
    if (o.out.empty()) {
        out << report.dump(2) << '\n';
    } else {
        write_text(fs::path(o.out) / "report.json", report.dump(2) + "\n");
        if (o.csv) {
            std::string csv = "mask,label,iou\n";
            for (const auto& [name, label, v] : rows) csv += name + "," + std::to_string(label) + "," + fmt(v) + "\n";
            write_text(fs::path(o.out) / "report.csv", csv);
        }
    }
    return kSuccess;
}

} // namespace

Command add_eval(CLI::App& root) {
    auto opts = std::make_shared<EvalOptions>();
    CLI::App* app = root.add_subcommand(
        "eval", "IoU agreement: --a vs --b (matched by file name), --a vs one --ref mask, or pairwise within --a");
    app->add_option("--a", opts->a, "Directory of mask PNGs")->required()->check(CLI::ExistingDirectory);
    app->add_option("--b", opts->b, "Second directory of mask PNGs")->check(CLI::ExistingDirectory);
    app->add_option("--ref", opts->ref, "Reference mask PNG")->check(CLI::ExistingFile);
    app->add_option("--label", opts->labels, "Labels to report (default: every label present)")
        ->check(CLI::Range(1, 255));
    app->add_option("--out", opts->out, "Directory for report.json (stdout when omitted)");
    app->add_flag("--csv", opts->csv, "Also write per-mask IoUs to report.csv (needs --out)");
    return {app, [opts](std::ostream& out, std::ostream&) { return run_eval(*opts, out); }};
}

} // namespace invmark::cli
