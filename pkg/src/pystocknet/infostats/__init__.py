from .pair_matrix import PairMatrix
from .correlation import (
    corr_distance, correlation_distribution_summary, correlation_matrix,
    pearson_correlation)
from .entropy import (
    entropy_discrete, entropy_from_counts, exact_mutual_information,
    joint_entropy_discrete, mi_distance, normalized_mi)
from .mutual_information import (
    AdaptivePartition, adaptive_partition, mutual_information_adaptive,
    number_of_bins)
from .permutation_test import permutation_test_mi
from .pair_sweep import pair_sweep
