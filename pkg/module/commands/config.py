# -*- coding: utf-8 -*-
#  Copyright (c) 2026 WW-Lab contributors. All rights reserved.
#
#  ww-lab.py
#
#  This work is licensed under the terms of the MIT license.
#  For a copy, see file LICENSE.txt included in this
#  repository or visit: <https://opensource.org/licenses/MIT>.

from module.config.option import ConfigOption
from module.config.group import ConfigOptionGroup
from module.config.base import ConfigBase
from module.config import numerics_config_section_name, check_config_section_name
from module.common.logging import get_logger
from module.common.misc import parse_complex_list
from module.oracle import valid_grid_rules, GRID_GAUSS
from module.resolvent import valid_modes, MODE_EXACT

log = get_logger()


class NumericsConfig(ConfigBase):
    """Controls the numerical parameters shared by all subcommands. Most of them
    can also be given on the command line, the command line wins.
    """

    section_name = numerics_config_section_name

    def __init__(self):
        self.options = [
            ConfigOptionGroup(title="time grid",
                              options=[
                ConfigOption("step",
                             float,
                             description="time step of the Volterra solver and of all written trajectories",
                             default_value=0.02,
                             strictly_positive=True),

                ConfigOption("t_max",
                             float,
                             description="""end of the time grid. If undefined three lifetimes of the
                             slowest golden rule rate are used""",
                             config_example=60.0,
                             strictly_positive=True),
            ]),

            ConfigOptionGroup(title="oracle",
                              description="discretization of the continuum into a finite Hamiltonian",
                              options=[
                ConfigOption("grid_m",
                             int,
                             description="number of continuum nodes M",
                             default_value=4000,
                             lower_bound=10),

                ConfigOption("grid_rule",
                             str,
                             description="""'gauss' uses Gauss-Legendre nodes per support interval,
                             'uniform' uses equally spaced nodes (box boundary conditions)""",
                             default_value=GRID_GAUSS,
                             choices=valid_grid_rules),

                ConfigOption("truncation",
                             float,
                             description="""half width of the window an unbounded flat channel is
                             cut to before it can be discretized""",
                             config_example=100.0,
                             strictly_positive=True),

                ConfigOption("ohmic_cutoff",
                             float,
                             description="ohmic channels are discretized on u = λ/λc in [0, ohmic_cutoff]",
                             default_value=40.0,
                             strictly_positive=True),
            ]),

            ConfigOptionGroup(title="pole search",
                              options=[
                ConfigOption("tol_root",
                             float,
                             description="accept a root if |det h^II(z)| is below tol_root·scale^N",
                             default_value=1e-10,
                             strictly_positive=True),

                ConfigOption("tol_step",
                             float,
                             description="Newton iteration stops once a step is below tol_step·scale",
                             default_value=1e-13,
                             strictly_positive=True),

                ConfigOption("max_iter",
                             int,
                             description="maximum Newton iterations per attempt",
                             default_value=100,
                             lower_bound=1),

                ConfigOption("max_poles",
                             int,
                             description="""stop after this many poles. If undefined the number of levels
                             plus the number of lorentzian channels is used""",
                             config_example=4,
                             lower_bound=1),

                ConfigOption("tol_deg",
                             float,
                             description="relative eigenvalue gap below which branches count as degenerate",
                             default_value=1e-8,
                             strictly_positive=True),

                ConfigOption("mode",
                             str,
                             description="""residues of the pole approximation: 'ww' uses the bare
                             projectors Q(z), 'exact' divides by 1 - dω/dz""",
                             default_value=MODE_EXACT,
                             choices=valid_modes),
            ]),

            ConfigOption("quad_tolerance",
                         float,
                         description="absolute and relative tolerance of adaptive quadrature",
                         default_value=1e-10,
                         strictly_positive=True),

            ConfigOption("background_depth",
                         float,
                         description="depth of the contour below a branch point, defaults to 40/t",
                         config_example=20.0,
                         strictly_positive=True),

            ConfigOption("background_points",
                         int,
                         description="Gauss-Legendre nodes of the contour integral",
                         default_value=200,
                         lower_bound=10),

            ConfigOption("lambda_sweep",
                         list,
                         description="""half widths Λ of flat windows [-Λ, Λ] swept by 'semigroup'
                         at fixed spectral density""",
                         config_example="5, 20, 80"),

            ConfigOption("zeno_factor",
                         float,
                         description="decay fits start at zeno_factor/√ΔH²",
                         default_value=10.0,
                         strictly_positive=True),

            ConfigOption("initial_state",
                         str,
                         description="""comma separated amplitudes c_α of the initial state, normalized
                         before use. Defaults to the first level""",
                         config_example="1, 0"),

            ConfigOption("seed",
                         int,
                         description="seed of the random vectors used by property checks",
                         default_value=12345,
                         lower_bound=0)
        ]

        super().__init__()

    def validate_options(self):

        for option in self.input_options():

            if option.key == "initial_state" and option.value is not None:
                try:
                    amplitudes = parse_complex_list(option.value)
                except ValueError as e:
                    log.error(f"Unable to parse 'initial_state' in '{self.section_name}': {e}")
                    self.set_validation_failed()
                    continue

                if sum(abs(x) ** 2 for x in amplitudes) == 0:
                    log.error(f"Config option 'initial_state' in '{self.section_name}' needs a nonzero amplitude")
                    self.set_validation_failed()

            if option.key == "lambda_sweep" and option.value is not None:
                if len(option.value) == 0 or any(x <= 0 for x in option.value):
                    log.error(f"Config option 'lambda_sweep' in '{self.section_name}' needs positive values")
                    self.set_validation_failed()


class CheckConfig(ConfigBase):
    """Thresholds of the 'check' subcommand. A check fails once its measured value
    crosses the threshold, any failed check makes the run exit with status 1.
    """

    section_name = check_config_section_name

    def __init__(self):
        self.options = [
            ConfigOption("agreement",
                         float,
                         description="""maximum Frobenius distance between Volterra, pole sum and oracle
                         propagators (the Volterra error estimate is used if larger)""",
                         default_value=1e-4,
                         strictly_positive=True),

            ConfigOption("order_ratio",
                         float,
                         description="minimum error reduction of the Volterra solver when the step is halved",
                         default_value=3.6,
                         strictly_positive=True),

            ConfigOptionGroup(title="first sheet",
                              description="numerical range bound Im⟨χ|h(z)χ⟩ >= Im z·‖χ‖² on a grid of z",
                              options=[
                ConfigOption("range_points_re",
                             int,
                             description="grid points along Re z",
                             default_value=20,
                             lower_bound=1),

                ConfigOption("range_points_im",
                             int,
                             description="grid points along Im z in [range_im_min, range_im_max]",
                             default_value=10,
                             lower_bound=1),

                ConfigOption("range_im_min",
                             float,
                             default_value=0.01,
                             strictly_positive=True),

                ConfigOption("range_im_max",
                             float,
                             default_value=2.0,
                             strictly_positive=True),

                ConfigOption("random_vectors",
                             int,
                             description="seeded random vectors χ per grid point",
                             default_value=1000,
                             lower_bound=1),
            ]),

            ConfigOption("sample_points",
                         int,
                         description="sampled z of the projector algebra check",
                         default_value=50,
                         lower_bound=1),

            ConfigOption("projector_tolerance",
                         float,
                         description="maximum ‖QαQβ - δαβQα‖_F and ‖ΣQα - 1‖_F",
                         default_value=1e-10,
                         strictly_positive=True),

            ConfigOption("semigroup_tolerance",
                         float,
                         description="maximum semigroup deviation of the Markovian propagator",
                         default_value=1e-12,
                         strictly_positive=True),

            ConfigOptionGroup(title="acceptance",
                              description="checks against the discretized oracle, skipped if it is unavailable",
                              options=[
                ConfigOption("rate_tolerance",
                             float,
                             description="""maximum relative spread of the fitted oracle rate, the pole rate
                             and the golden rule rate of a single level""",
                             default_value=0.02,
                             strictly_positive=True),

                ConfigOption("flatness_limit",
                             float,
                             description="""the rate check only runs if ω varies by less than this (relative)
                             across the line width""",
                             default_value=0.05,
                             strictly_positive=True),

                ConfigOption("zeno_fraction",
                             float,
                             description="""the Zeno fit ends at this fraction of 1/√ΔH² or of the inverse
                             model energy scale, whichever is smaller""",
                             default_value=0.01,
                             strictly_positive=True),

                ConfigOption("zeno_tolerance",
                             float,
                             description="maximum relative deviation of the fitted ΔH² from the model value",
                             default_value=0.01,
                             strictly_positive=True),

                ConfigOption("background_points",
                             int,
                             description="times between 0 and two lifetimes the background decomposition is tested at",
                             default_value=40,
                             lower_bound=2),

                ConfigOption("background_tolerance",
                             float,
                             description="""maximum Frobenius distance between pole sum plus background and
                             the oracle of a half line model""",
                             default_value=5e-3,
                             strictly_positive=True),
            ]),
        ]

        super().__init__()

    def validate_options(self):

        low = self.get_option_by_name("range_im_min").value
        high = self.get_option_by_name("range_im_max").value
        if low is not None and high is not None and low >= high:
            log.error(f"Config option 'range_im_min' in '{self.section_name}' must be below 'range_im_max'")
            self.set_validation_failed()

# EOF
