// SPDX-License-Identifier: Apache-2.0
//
// fr3mb - multi-band MIMO resource allocation for the upper mid-band
// Copyright (C) 2026 The fr3mb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "commands.hpp"
#include "manifest.hpp"

#include "fr3mb/allocator.hpp"
#include "fr3mb/architectures.hpp"
#include "fr3mb/capacity.hpp"
#include "fr3mb/channel_io.hpp"
#include "fr3mb/report.hpp"
#include "fr3mb/se_table_csv.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace fr3mb::cli
{
    namespace
    {
        std::vector<std::string> split(const std::string &text, char sep)
        {
            std::vector<std::string> parts;
            std::string item;
            std::istringstream in(text);
            while (std::getline(in, item, sep))
                if (!item.empty())
                    parts.push_back(item);
            return parts;
        }

        double parse_number(const std::string &text, const std::string &what)
        {
            std::size_t used = 0;
            double value = 0.0;
            try
            {
                value = std::stod(text, &used);
            }
            catch (const std::exception &)
            {
                used = 0;
            }
            if (used == 0 || used != text.size())
                throw std::invalid_argument("Invalid " + what + " '" + text + "'.");
            return value;
        }

        int parse_int(const std::string &text, const std::string &what)
        {
            std::size_t used = 0;
            long value = 0;
            try
            {
                value = std::stol(text, &used);
            }
            catch (const std::exception &)
            {
                used = 0;
            }
            if (used == 0 || used != text.size() || value < std::numeric_limits<int>::min() ||
                value > std::numeric_limits<int>::max())
                throw std::invalid_argument("Invalid " + what + " '" + text + "'.");
            return int(value);
        }

        // Opens for writing or throws.
        std::ofstream open_output(const std::string &path)
        {
            std::ofstream out(path, std::ios::binary);
            if (!out)
                throw std::runtime_error("Cannot write '" + path + "'.");
            return out;
        }

        struct TableSource
        {
            std::string path;
            std::string builtin;

            SeTable load() const
            {
                if (!path.empty() && !builtin.empty())
                    throw std::invalid_argument("Use either --table or --builtin, not both.");
                if (!builtin.empty())
                {
                    auto tables = builtin_reference_tables();
                    if (builtin == "indoor")
                        return tables.indoor;
                    if (builtin == "outdoor")
                        return tables.outdoor;
                    throw std::invalid_argument("--builtin must be 'indoor' or 'outdoor'.");
                }
                if (path.empty())
                    throw std::invalid_argument("A table is required: --table <csv> or --builtin indoor|outdoor.");
                return load_se_table(path);
            }

            void describe(RunManifest &m) const
            {
                if (!builtin.empty())
                    m.arguments["builtin"] = builtin;
                if (!path.empty())
                {
                    m.arguments["table"] = path;
                    m.input_files.push_back(path);
                }
            }
        };

        void add_table_options(CLI::App *cmd, TableSource &source)
        {
            cmd->add_option("--table", source.path, "SE table CSV");
            cmd->add_option("--builtin", source.builtin, "Reference table: indoor | outdoor");
        }

        struct MaskOptions
        {
            std::string only;
            std::string exclude;

            void add(CLI::App *cmd)
            {
                cmd->add_option("--only", only, "Available subbands, comma-separated GHz (e.g. 7,24)");
                cmd->add_option("--exclude", exclude, "Unavailable subbands, comma-separated GHz");
            }

            void describe(RunManifest &m) const
            {
                if (!only.empty())
                    m.arguments["only"] = only;
                if (!exclude.empty())
                    m.arguments["exclude"] = exclude;
            }
        };

        // ------------------------------------------------------------------

        struct GenChannelsArgs
        {
            std::string config_path;
            std::string preset;
            std::uint64_t seed = 1;
            std::string out_path;
            unsigned threads = 1;
        };

        int cmd_gen_channels(const GenChannelsArgs &a, std::ostream &out)
        {
            ScenarioConfig cfg;
            RunManifest manifest{"gen-channels"};
            if (!a.config_path.empty() && !a.preset.empty())
                throw std::invalid_argument("Use either --config or --preset, not both.");
            if (!a.config_path.empty())
            {
                std::ifstream in(a.config_path);
                if (!in)
                    throw std::runtime_error("Cannot open config '" + a.config_path + "'.");
                nlohmann::json j;
                try
                {
                    j = nlohmann::json::parse(in);
                }
                catch (const nlohmann::json::parse_error &e)
                {
                    throw ConfigurationError("Config '" + a.config_path + "' is not valid JSON: " + e.what());
                }
                cfg = scenario_from_json(j);
                manifest.input_files.push_back(a.config_path);
                manifest.arguments["config"] = a.config_path;
            }
            else if (!a.preset.empty())
            {
                cfg = scenario_from_json(nlohmann::json{{"kind", a.preset}});
                manifest.arguments["preset"] = a.preset;
            }
            else
                throw std::invalid_argument("gen-channels needs --config <json> or --preset indoor|outdoor.");

            ChannelSet set = synth_generate(cfg, a.seed, a.threads);
            auto file = open_output(a.out_path);
            write_channels(file, set);
            file.close();
            if (!file)
                throw std::runtime_error("Failed writing '" + a.out_path + "'.");

            manifest.seed = a.seed;
            manifest.arguments["seed"] = std::to_string(a.seed);
            manifest.output_paths = {a.out_path};
            manifest.write_next_to(a.out_path);
            out << "wrote " << set.size() << " channel records to " << a.out_path << '\n';
            return 0;
        }

        struct BuildTableArgs
        {
            std::string channels_path;
            double snr_db = 0.0;
            std::string ladder = "linear:9";
            int ue_antennas = 9;
            std::string out_path;
            unsigned threads = 1;
        };

        int cmd_build_table(const BuildTableArgs &a, std::ostream &out)
        {
            ChannelSet channels = ingest_channels_file(a.channels_path);
            SizeLadder ladder = parse_ladder(a.ladder);
            SizeMap sizes = a.ladder.rfind("square:", 0) == 0 ? square_size_map(ladder, a.ue_antennas)
                                                                : linear_size_map(ladder);
            SeTable table = build_se_table(channels, ladder, sizes, SnrConfig::from_db(a.snr_db), a.threads);

            auto file = open_output(a.out_path);
            write_se_table_csv(file, table);
            file.close();
            if (!file)
                throw std::runtime_error("Failed writing '" + a.out_path + "'.");

            RunManifest manifest{"build-table"};
            manifest.arguments = {{"channels", a.channels_path},
                                  {"snr_db", std::to_string(a.snr_db)},
                                  {"ladder", a.ladder}};
            if (a.ladder.rfind("square:", 0) == 0)
                manifest.arguments["ue_antennas"] = std::to_string(a.ue_antennas);
            manifest.input_files = {a.channels_path};
            manifest.output_paths = {a.out_path};
            manifest.write_next_to(a.out_path);
            out << "wrote " << table.option_count() << "x" << table.subband_count() << " SE table to " << a.out_path
                << '\n';
            return 0;
        }

        struct OptimizeArgs
        {
            TableSource table;
            MaskOptions mask;
            int budget = 0;
            std::string out_path;
        };

        int cmd_optimize(const OptimizeArgs &a, std::ostream &out)
        {
            SeTable table = a.table.load();
            AvailabilityMask mask = mask_from_lists(table, a.mask.only, a.mask.exclude);
            AllocationResult result = optimize(AllocationProblem(table, a.budget, mask));
            const std::string json = allocation_json(table, a.budget, mask, result).dump(2) + "\n";

            if (a.out_path.empty())
            {
                out << json;
                return 0;
            }
            auto file = open_output(a.out_path);
            file << json;
            file.close();
            if (!file)
                throw std::runtime_error("Failed writing '" + a.out_path + "'.");

            RunManifest manifest{"optimize"};
            a.table.describe(manifest);
            a.mask.describe(manifest);
            manifest.arguments["budget"] = std::to_string(a.budget);
            manifest.output_paths = {a.out_path};
            manifest.write_next_to(a.out_path);
            return 0;
        }

        struct SweepArgs
        {
            TableSource table;
            MaskOptions mask;
            std::string budgets = "0:45";
            std::string out_path;
        };

        int cmd_sweep(const SweepArgs &a, std::ostream &out)
        {
            SeTable table = a.table.load();
            AvailabilityMask mask = mask_from_lists(table, a.mask.only, a.mask.exclude);
            std::vector<int> budgets = parse_budget_range(a.budgets);
            auto results = sweep(table, budgets, mask);

            if (a.out_path.empty())
            {
                write_sweep_csv(out, table, budgets, results);
                return 0;
            }
            auto file = open_output(a.out_path);
            write_sweep_csv(file, table, budgets, results);
            file.close();
            if (!file)
                throw std::runtime_error("Failed writing '" + a.out_path + "'.");

            RunManifest manifest{"sweep"};
            a.table.describe(manifest);
            a.mask.describe(manifest);
            manifest.arguments["budgets"] = a.budgets;
            manifest.output_paths = {a.out_path};
            manifest.notes.push_back("budget = total antenna count at the variable (receive) end");
            manifest.write_next_to(a.out_path);
            return 0;
        }

        struct CompareArgs
        {
            TableSource table;
            MaskOptions mask;
            double half_width_ghz = 0.5;
            ComparisonHardware hw;
            std::string out_path;
            std::string radar_path;
        };

        int cmd_compare(const CompareArgs &a, std::ostream &out)
        {
            SeTable table = a.table.load();
            AvailabilityMask mask = mask_from_lists(table, a.mask.only.empty() && a.mask.exclude.empty() ? "7,24" : a.mask.only,
                                                    a.mask.exclude);
            SubbandPlan plan = SubbandPlan::from_centers(table.subband_centers_ghz(), a.half_width_ghz);

            std::vector<ArchitectureMetrics> metrics;
            for (const auto &spec : reference_comparison_specs(plan, a.hw))
                metrics.push_back(evaluate(spec, plan, table, mask));

            const int largest = table.ladder().cost(table.option_count() - 1);
            const bool truncated = largest < a.hw.antennas_per_subband;

            std::ostringstream raw, radar;
            write_radar_raw_csv(raw, metrics);
            write_radar_normalized_csv(radar, metrics);

            if (a.out_path.empty())
            {
                out << raw.str() << '\n' << radar.str();
                return 0;
            }
            const std::string radar_path = a.radar_path.empty() ? a.out_path + ".radar.csv" : a.radar_path;
            for (const auto &[path, text] : {std::pair{a.out_path, raw.str()}, std::pair{radar_path, radar.str()}})
            {
                auto file = open_output(path);
                file << text;
                file.close();
                if (!file)
                    throw std::runtime_error("Failed writing '" + path + "'.");
            }

            RunManifest manifest{"compare"};
            a.table.describe(manifest);
            a.mask.describe(manifest);
            manifest.arguments["half_width_ghz"] = std::to_string(a.half_width_ghz);
            manifest.arguments["antennas_per_subband"] = std::to_string(a.hw.antennas_per_subband);
            manifest.arguments["shared_converters"] = std::to_string(a.hw.shared_converters);
            manifest.arguments["integrated_per_subband"] = std::to_string(a.hw.integrated_per_subband);
            manifest.output_paths = {a.out_path, radar_path};
            manifest.notes.push_back(truncated ? "ladder truncated: largest table option costs " + std::to_string(largest) +
                                                     " < " + std::to_string(a.hw.antennas_per_subband) +
                                                     " antennas per subband"
                                               : "ladder covers the full per-subband array");
            manifest.write_next_to(a.out_path);
            return 0;
        }

        struct ExportArgs
        {
            std::string which = "indoor";
            std::string out_path;
        };

        int cmd_export_builtin(const ExportArgs &a, std::ostream &out)
        {
            TableSource source{"", a.which};
            SeTable table = source.load();
            if (a.out_path.empty())
            {
                write_se_table_csv(out, table);
                return 0;
            }
            auto file = open_output(a.out_path);
            write_se_table_csv(file, table);
            file.close();
            if (!file)
                throw std::runtime_error("Failed writing '" + a.out_path + "'.");
            RunManifest manifest{"export-builtin"};
            manifest.arguments["builtin"] = a.which;
            manifest.output_paths = {a.out_path};
            manifest.write_next_to(a.out_path);
            return 0;
        }
    }

    // ----------------------------------------------------------------------

    ScenarioConfig scenario_from_json(const nlohmann::json &j)
    {
        if (!j.is_object())
            throw ConfigurationError("Scenario config must be a JSON object.");

        ScenarioConfig cfg;
        if (j.contains("kind"))
        {
            if (!j["kind"].is_string())
                throw ConfigurationError("Scenario field 'kind': must be a string.");
            const std::string kind = j["kind"];
            if (kind == "indoor")
                cfg = ScenarioConfig::indoor();
            else if (kind == "outdoor")
                cfg = ScenarioConfig::outdoor();
            else if (kind != "custom")
                throw ConfigurationError("Scenario field 'kind': expected indoor, outdoor or custom, got '" + kind + "'.");
        }

        auto field = [&](const std::string &key) -> const nlohmann::json & { return j.at(key); };
        auto as_int = [&](const std::string &key)
        {
            if (!field(key).is_number_integer())
                throw ConfigurationError("Scenario field '" + key + "': must be an integer.");
            return field(key).get<int>();
        };
        auto as_real = [&](const std::string &key)
        {
            const auto &v = field(key);
            if (v.is_number())
                return v.get<double>();
            if (v.is_string() && (v == "inf" || v == "+inf"))
                return std::numeric_limits<double>::infinity();
            if (v.is_string() && v == "-inf")
                return -std::numeric_limits<double>::infinity();
            throw ConfigurationError("Scenario field '" + key + "': must be a number.");
        };

        for (const auto &[key, value] : j.items())
        {
            if (key == "kind")
                continue;
            else if (key == "num_users")
                cfg.num_users = as_int(key);
            else if (key == "rx_antennas")
                cfg.rx_antennas = as_int(key);
            else if (key == "tx_antennas")
                cfg.tx_antennas = as_int(key);
            else if (key == "cluster_count")
                cfg.cluster_count = as_int(key);
            else if (key == "rays_per_cluster")
                cfg.rays_per_cluster = as_int(key);
            else if (key == "rician_k_db")
                cfg.rician_k_db = as_real(key);
            else if (key == "angular_spread_deg")
                cfg.angular_spread_deg = as_real(key);
            else if (key == "delay_spread_ns")
                cfg.delay_spread_ns = as_real(key);
            else if (key == "cluster_decay_db_per_ghz")
                cfg.cluster_decay_db_per_ghz = as_real(key);
            else if (key == "frequencies")
            {
                if (!value.is_array())
                    throw ConfigurationError("Scenario field 'frequencies_ghz': must be an array of numbers.");
                cfg.frequencies_ghz.clear();
                for (const auto &f : value)
                {
                    if (!f.is_number())
                        throw ConfigurationError("Scenario field 'frequencies_ghz': must be an array of numbers.");
                    cfg.frequencies_ghz.push_back(f.get<double>());
                }
            }
            else if (key == "distance_range_m")
            {
                if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number())
                    throw ConfigurationError("Scenario field 'distance_range_m': must be [min, max].");
                cfg.distance_min_m = value[0].get<double>();
                cfg.distance_max_m = value[1].get<double>();
            }
            else
                throw ConfigurationError("Scenario field '" + key + "': unknown field.");
        }
        cfg.validate();
        return cfg;
    }

    SizeLadder parse_ladder(const std::string &spec)
    {
        auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("Ladder must be 'linear:<max>' or 'square:<max>', got '" + spec + "'.");
        const std::string kind = spec.substr(0, colon);
        const int max = parse_int(spec.substr(colon + 1), "ladder size");
        if (max < 1)
            throw std::invalid_argument("Ladder size must be at least 1.");
        if (kind == "linear")
            return SizeLadder::linear(max);
        if (kind == "square")
            return SizeLadder::square(max);
        throw std::invalid_argument("Ladder must be 'linear:<max>' or 'square:<max>', got '" + spec + "'.");
    }

    std::vector<int> parse_budget_range(const std::string &spec)
    {
        auto parts = split(spec, ':');
        if (parts.size() < 2 || parts.size() > 3)
            throw std::invalid_argument("Budget range must be 'lo:hi' or 'lo:hi:step', got '" + spec + "'.");
        int lo = parse_int(parts[0], "budget");
        int hi = parse_int(parts[1], "budget");
        int step = parts.size() == 3 ? parse_int(parts[2], "budget step") : 1;
        if (lo < 0 || hi < lo || step < 1)
            throw std::invalid_argument("Budget range must satisfy 0 <= lo <= hi and step >= 1.");
        std::vector<int> budgets;
        for (long b = lo; b <= hi; b += step)
            budgets.push_back(int(b));
        return budgets;
    }

    AvailabilityMask mask_from_lists(const SeTable &table, const std::string &only, const std::string &exclude)
    {
        auto lookup = [&](const std::string &item)
        {
            double f = parse_number(item, "frequency");
            auto s = table.subband_at(f);
            if (!s)
                throw std::invalid_argument("Frequency " + item + " GHz is not a subband of the table.");
            return *s;
        };

        std::vector<bool> flags(table.subband_count(), only.empty());
        for (const auto &item : split(only, ','))
            flags[lookup(item)] = true;
        for (const auto &item : split(exclude, ','))
            flags[lookup(item)] = false;
        return AvailabilityMask(std::move(flags));
    }

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Multi-band MIMO resource allocation for the upper mid-band"};
        app.require_subcommand(1);
        app.set_version_flag("--version", kToolVersion);

        GenChannelsArgs gen;
        auto *gen_cmd = app.add_subcommand("gen-channels", "Generate synthetic clustered-multipath channels");
        gen_cmd->add_option("--config", gen.config_path, "Scenario JSON");
        gen_cmd->add_option("--preset", gen.preset, "indoor | outdoor");
        gen_cmd->add_option("--seed", gen.seed, "Generator seed");
        gen_cmd->add_option("--out", gen.out_path, "Channel file to write")->required();
        gen_cmd->add_option("--threads", gen.threads, "Worker threads");

        BuildTableArgs build;
        auto *build_cmd = app.add_subcommand("build-table", "Average spectral efficiency per MIMO size and frequency");
        build_cmd->add_option("--channels", build.channels_path, "Channel file")->required();
        build_cmd->add_option("--snr-db", build.snr_db, "Per-antenna SNR rho in dB, applied to the stored gains");
        build_cmd->add_option("--ladder", build.ladder, "linear:<max> (n x n) or square:<max> (k x k against a fixed UE)");
        build_cmd->add_option("--ue-antennas", build.ue_antennas, "Fixed terminal antennas for square ladders");
        build_cmd->add_option("--out", build.out_path, "SE table CSV to write")->required();
        build_cmd->add_option("--threads", build.threads, "Worker threads");

        OptimizeArgs opt;
        auto *opt_cmd = app.add_subcommand("optimize", "Best allocation of an antenna budget across subbands");
        add_table_options(opt_cmd, opt.table);
        opt.mask.add(opt_cmd);
        opt_cmd->add_option("--budget", opt.budget, "Total antennas at the variable end")->required();
        opt_cmd->add_option("--out", opt.out_path, "Allocation JSON (stdout when omitted)");

        SweepArgs sw;
        auto *sweep_cmd = app.add_subcommand("sweep", "Optimal allocation over a range of budgets (stacked CSV)");
        add_table_options(sweep_cmd, sw.table);
        sw.mask.add(sweep_cmd);
        sweep_cmd->add_option("--budgets", sw.budgets, "lo:hi[:step], inclusive");
        sweep_cmd->add_option("--out", sw.out_path, "Sweep CSV (stdout when omitted)");

        CompareArgs cmp;
        auto *cmp_cmd = app.add_subcommand("compare", "Compare partitioned, integrated, adaptive and all-antennas designs");
        add_table_options(cmp_cmd, cmp.table);
        cmp.mask.add(cmp_cmd);
        cmp_cmd->add_option("--half-width", cmp.half_width_ghz, "Subband half width in GHz");
        cmp_cmd->add_option("--antennas-per-subband", cmp.hw.antennas_per_subband, "RF frontends per subband (default 196)");
        cmp_cmd->add_option("--shared-converters", cmp.hw.shared_converters, "Converter pool of the partitioned and adaptive designs (default 196)");
        cmp_cmd->add_option("--integrated-per-subband", cmp.hw.integrated_per_subband, "Dedicated converters per subband, integrated design (default 36)");
        cmp_cmd->add_option("--out", cmp.out_path, "Raw metrics CSV (stdout when omitted)");
        cmp_cmd->add_option("--radar-out", cmp.radar_path, "Normalized radar CSV (default <out>.radar.csv)");

        ExportArgs exp;
        auto *exp_cmd = app.add_subcommand("export-builtin", "Write a reference table as SE table CSV");
        exp_cmd->add_option("--builtin", exp.which, "indoor | outdoor");
        exp_cmd->add_option("--out", exp.out_path, "SE table CSV (stdout when omitted)");

        std::vector<const char *> argv;
        for (const auto &a : args)
            argv.push_back(a.c_str());

        try
        {
            app.parse(int(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            return 0;
        }
        catch (const CLI::CallForVersion &)
        {
            out << kToolVersion << '\n';
            return 0;
        }
        catch (const CLI::ParseError &e)
        {
            err << "error: " << e.what() << '\n';
            return 2;
        }

        try
        {
            if (gen_cmd->parsed())
                return cmd_gen_channels(gen, out);
            if (build_cmd->parsed())
                return cmd_build_table(build, out);
            if (opt_cmd->parsed())
                return cmd_optimize(opt, out);
            if (sweep_cmd->parsed())
                return cmd_sweep(sw, out);
            if (cmp_cmd->parsed())
                return cmd_compare(cmp, out);
            if (exp_cmd->parsed())
                return cmd_export_builtin(exp, out);
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << '\n';
            return 1;
        }
        return 2;
    }
}
