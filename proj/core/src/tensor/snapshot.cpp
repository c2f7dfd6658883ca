#include "tlrq/tensor/snapshot.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tlrq {

namespace {

constexpr std::string_view kFormat = "tlrq.factor_set";

nlohmann::json flatten(const Matrix& m) {
    if (!m.allFinite()) throw std::invalid_argument("cannot snapshot a factor set with non-finite entries");
    return nlohmann::json(std::vector<double>(m.data(), m.data() + m.size()));
}

Matrix unflatten(const nlohmann::json& j, std::size_t rows, std::size_t cols, const char* name) {
    const auto values = j.at(name).get<std::vector<double>>();
    if (values.size() != rows * cols) {
        throw std::invalid_argument(std::string("snapshot field '") + name + "' has " +
                                    std::to_string(values.size()) + " entries, expected " +
                                    std::to_string(rows * cols));
    }
    Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    std::copy(values.begin(), values.end(), m.data());
    return m;
}

}  // namespace

std::string to_snapshot(const FactorSet& fs) {
    const Dims d = fs.dims();
    nlohmann::json j;
    j["format"] = kFormat;
    j["version"] = 1;
    j["dims"] = {{"states", d.n_states}, {"actions", d.n_actions}, {"tasks", d.n_tasks}};
    j["rank"] = fs.rank();
    j["seed"] = fs.seed() ? nlohmann::json(*fs.seed()) : nlohmann::json(nullptr);
    j["states"] = flatten(fs.states());
    j["actions"] = flatten(fs.actions());
    j["tasks"] = flatten(fs.tasks());
    return j.dump();
}

FactorSet from_snapshot(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        if (j.at("format").get<std::string>() != kFormat) {
            throw std::invalid_argument("not a factor-set snapshot");
        }
        if (j.at("version").get<int>() != 1) {
            throw std::invalid_argument("unsupported snapshot version");
        }
        Dims d{j.at("dims").at("states").get<std::size_t>(), j.at("dims").at("actions").get<std::size_t>(),
               j.at("dims").at("tasks").get<std::size_t>()};
        d.validate();
        const auto rank = j.at("rank").get<std::size_t>();
        if (rank == 0) throw std::invalid_argument("snapshot rank must be positive");
        std::optional<std::uint64_t> seed;
        if (!j.at("seed").is_null()) seed = j.at("seed").get<std::uint64_t>();
        return FactorSet(unflatten(j, d.n_states, rank, "states"), unflatten(j, d.n_actions, rank, "actions"),
                         unflatten(j, d.n_tasks, rank, "tasks"), seed);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed factor-set snapshot: ") + e.what());
    }
}

void save_snapshot(const FactorSet& fs, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << to_snapshot(fs) << '\n';
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

FactorSet load_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return from_snapshot(buf.str());
}

}  // namespace tlrq
