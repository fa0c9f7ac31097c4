#include "cogail/demos/dataset.hpp"
#include "cogail/env/fetch_quest.hpp"
#include "cogail/env/scripted_expert.hpp"
#include "cogail/eval/eval.hpp"
#include "cogail/ppo/trainer.hpp"
#include "cogail/service/config.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace cogail;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json from_py(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

env::AgentAction act(const std::pair<double, double>& a) { return {a.first, a.second}; }

struct Checkpoint {
  eval::LoadedCheckpoint c;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("ENV_VERSION") = env::kEnvVersion;

  py::class_<env::EnvState>(m, "EnvState")
      .def_property_readonly("human_pos", [](const env::EnvState& s) { return std::pair{s.human_pos.x, s.human_pos.y}; })
      .def_property_readonly("robot_pos", [](const env::EnvState& s) { return std::pair{s.robot_pos.x, s.robot_pos.y}; })
      .def_property_readonly("door_open", [](const env::EnvState& s) { return s.door_open; })
      .def_readonly("step", &env::EnvState::step)
      .def_readonly("done", &env::EnvState::done)
      .def_readonly("success", &env::EnvState::success)
      .def("__eq__", [](const env::EnvState& a, const env::EnvState& b) { return a == b; });

  py::class_<env::FetchQuest>(m, "FetchQuest")
      .def(py::init([](py::object layout) {
             if (layout.is_none()) return env::FetchQuest{};
             return env::FetchQuest(env::Layout::from_json(from_py(layout)));
           }),
           py::arg("layout") = py::none())
      .def("layout", [](const env::FetchQuest& e) { return to_py(e.layout().to_json()); })
      .def("layout_hash", [](const env::FetchQuest& e) { return e.layout().hash(); })
      .def("reset", &env::FetchQuest::reset, py::arg("seed"))
      .def(
          "step",
          [](const env::FetchQuest& e, const env::EnvState& s, std::pair<double, double> h, std::pair<double, double> r) {
            const env::StepResult res = e.step(s, act(h), act(r));
            return res.state;
          },
          py::arg("state"), py::arg("human"), py::arg("robot"))
      .def("observe", [](const env::FetchQuest& e, const env::EnvState& s) {
        const env::Observation o = e.observe(s);
        return std::vector<double>(o.begin(), o.end());
      });

  m.def("classify_strategy", [](const std::vector<std::array<double, env::kObsDim>>& obs) {
    return env::classify_strategy(obs);
  });

  py::class_<demos::DemoDataset>(m, "DemoDataset")
      .def("__len__", [](const demos::DemoDataset& d) { return d.demos.size(); })
      .def("total_steps", &demos::DemoDataset::total_steps)
      .def("strategy_counts", &demos::DemoDataset::strategy_counts)
      .def("seeds",
           [](const demos::DemoDataset& d) {
             std::vector<std::uint64_t> s;
             for (const auto& demo : d.demos) s.push_back(demo.meta.seed);
             return s;
           })
      .def("replay_errors",
           [](const demos::DemoDataset& d) {
             const env::FetchQuest e(d.layout);
             std::vector<double> out;
             for (const auto& demo : d.demos) out.push_back(demos::replay_error(e, demo));
             return out;
           })
      .def("save", [](const demos::DemoDataset& d, const std::filesystem::path& p) { demos::save(d, p); })
      .def("to_bytes", [](const demos::DemoDataset& d) { return py::bytes(demos::serialize(d)); });

  m.def(
      "generate_dataset",
      [](int count, std::array<double, 4> proportions, std::uint64_t seed, double noise_sigma) {
        demos::DatasetSpec spec;
        spec.count = count;
        spec.proportions = proportions;
        spec.seed = seed;
        spec.noise_sigma = noise_sigma;
        return demos::generate_dataset(spec);
      },
      py::arg("count"), py::arg("proportions") = std::array<double, 4>{0.25, 0.25, 0.25, 0.25}, py::arg("seed") = 0,
      py::arg("noise_sigma") = 0.05);
  m.def("load_dataset", [](const std::filesystem::path& p) { return demos::load(p); });
  m.def("parse_distribution", &service::parse_distribution);

  py::class_<Checkpoint>(m, "Checkpoint")
      .def_property_readonly("episode", [](const Checkpoint& c) { return c.c.episode; })
      .def_property_readonly("mode", [](const Checkpoint& c) { return std::string(core::to_string(c.c.model->mode)); })
      .def(
          "eval_interpolation",
          [](const Checkpoint& c, int n_codes, std::uint64_t seed) {
            eval::EvalReport r;
            {
              py::gil_scoped_release release;
              r = eval::eval_interpolation(*c.c.model, c.c.layout, n_codes, seed);
            }
            r.episode = c.c.episode;
            return to_py(r.summary());
          },
          py::arg("n_codes") = 100, py::arg("seed") = 0)
      .def(
          "eval_replay",
          [](const Checkpoint& c, const demos::DemoDataset& test) {
            eval::EvalReport r;
            {
              py::gil_scoped_release release;
              r = eval::eval_replay(*c.c.model, c.c.layout, test, nullptr);
            }
            r.episode = c.c.episode;
            return to_py(r.summary());
          },
          py::arg("test"));
  m.def("load_checkpoint", [](const std::filesystem::path& p) { return Checkpoint{eval::load_checkpoint(p)}; });

  m.def(
      "train",
      [](const std::filesystem::path& demos_path, const std::filesystem::path& out_dir, py::object config) {
        const service::RunConfig rc =
            config.is_none() ? service::RunConfig{} : service::RunConfig::from_json(from_py(config));
        auto ds = std::make_shared<const demos::DemoDataset>(demos::load(demos_path));
        ppo::TrainResult res;
        {
          py::gil_scoped_release release;
          res = ppo::train(rc.train, rc.ppo, ds, out_dir);
        }
        py::list rows;
        for (const auto& row : res.metrics) rows.append(to_py(row.to_json(false)));
        return rows;
      },
      py::arg("demos"), py::arg("out_dir"), py::arg("config") = py::none());

  m.def("gail_reward", [](const std::string& mode, double raw) {
    return core::gail_reward(core::parse_disc_loss(mode), raw);
  });
  m.def("decayed_lr", &ppo::decayed_lr);
}
