#include "commands.hpp"

#include <invmark/cli.hpp>
#include <invmark/ingest.hpp>

#include <memory>
#include <ostream>

namespace invmark::cli {

namespace {

struct PairOptions {
    std::string manifest;
    std::string out;
};

int run_pair(const PairOptions& o, std::ostream& out) {
    const auto stream = ingest::load_stream(o.manifest);
    const auto pairs = ingest::pair_stream(stream.frames);

    std::map<std::int64_t, std::string> path_of;
    for (const auto& e : stream.manifest.entries) path_of[e.seq] = e.path.generic_string();

    nlohmann::json list = nlohmann::json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i)
        list.push_back({{"pair", i},
                        {"regular_seq", pairs[i].regular.seq},
                        {"uv_seq", pairs[i].uv.seq},
                        {"regular", path_of[pairs[i].regular.seq]},
                        {"uv", path_of[pairs[i].uv.seq]}});
    const nlohmann::json doc = {{"pairs", std::move(list)}, {"dropped", stream.frames.size() - 2 * pairs.size()}};

    if (o.out.empty())
        out << doc.dump(2) << '\n';
    else
        write_text(std::filesystem::path(o.out) / "pairs.json", doc.dump(2) + "\n");
    return kSuccess;
}

} // namespace

Command add_pair(CLI::App& root) {
    auto opts = std::make_shared<PairOptions>();
    CLI::App* app = root.add_subcommand("pair", "Validate a stream manifest and list its (regular, uv) pairs");
    app->add_option("--manifest", opts->manifest, "Stream manifest JSON")->required()->check(CLI::ExistingFile);
    app->add_option("--out", opts->out, "Directory for pairs.json (stdout when omitted)");
    return {app, [opts](std::ostream& out, std::ostream&) { return run_pair(*opts, out); }};
}

} // namespace invmark::cli
