"""Genetic-algorithm generation of personalised learning paths."""
from .config import ConfigError, Crossover, GaConfig, Init, SaSchedule, Selection
from .course import (Concept, Course, CourseDataError, InvalidPathError, LearningPath,
                     RelationDegreeMatrix, load_course, traditional_path, validate_path)
from .fitness import Evaluator, FitnessParams, FitnessScore, Variant, evaluate
from .ga import GenerationStats, RunResult, evolve, run
from .operators import (Individual, cycle_crossover, pmx_crossover, roulette_select,
                        swap_mutate, tournament_select)
from .oracle import CourseTooLargeError, OracleResult, exhaustive_best
from .samples import load_sample, sample_files
from .seeding import (accept_probability, hill_climb_seed, random_population,
                      seed_population, simulated_annealing_seed)

__version__ = "0.1.0"
