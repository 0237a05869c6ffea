"""Decide between feature selection and feature extraction for clustering."""

from ._dimred import (
    ClusteringResult,
    Dataset,
    DecisionConfig,
    DecisionReport,
    Error,
    FeatureWeights,
    IngestionError,
    IoError,
    Method,
    MetricError,
    ParameterError,
    PcaModel,
    RandomCase,
    SchemaError,
    SubsetScore,
    count_misclassified,
    decide,
    enumerate_subsets,
    frsd_rank,
    generate_cases,
    jacobi_eigen,
    kmeans_fit,
    load_csv,
    minmax_normalize,
    parse_csv,
    pca_fit,
    pca_importance,
    pca_project,
    reference_frsd_weights,
    reference_pca_weights,
    report_from_json,
    run_decision,
    run_figures,
    select_for_resolution,
    silhouette,
)

__all__ = [name for name in dir() if not name.startswith("_")]
