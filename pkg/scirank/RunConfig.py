"""
Run configuration shared by every pipeline command.

Each tunable is declared once in TUNABLES and gets one command-line flag
(``--alpha-p``) and one config key (``ALPHA_P``). A value is taken from the
flag, else from the ``[settings]`` section of the ``--config`` ini file, else
from settings.SCIRANK (which already reads the environment).
"""
from __future__ import annotations

import configparser
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple

from decouple import Csv, RepositoryIni
from django.conf import settings
from rest_framework import serializers

from corpus.models import PreprocessConfig
from mrfrank.models import MODES, HyperParams
from mrfrank.serializers import HyperParamsSerializer
from textfeat.models import LAMBDA_SCOPES, FeatureConfig
from textfeat.serializers import FeatureConfigSerializer

PREPROCESS = "preprocess"
FEATURES = "features"
HYPER = "hyper"
PROTOCOL = "protocol"

TRUE_STRINGS = {"1", "true", "yes", "on", "y", "t"}
FALSE_STRINGS = {"0", "false", "no", "off", "n", "f", ""}


def as_bool(value) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in TRUE_STRINGS:
        return True
    if text in FALSE_STRINGS:
        return False
    raise ValueError(f"not a boolean: {value!r}")


def as_mode(value) -> str:
    return str(value).strip().replace("-", "_")


@dataclass(frozen=True)
class Tunable:
    name: str
    group: str
    parse: Callable[[str], Any]
    help: str
    choices: Optional[Tuple[str, ...]] = None

    @property
    def key(self) -> str:
        return self.name.upper()

    @property
    def flag(self) -> str:
        return "--" + self.name.replace("_", "-")


TUNABLES = (
    Tunable("min_year", PREPROCESS, int, "drop papers published before this year"),
    Tunable("require_abstract", PREPROCESS, as_bool, "drop papers without an abstract"),
    Tunable("title_patterns", PREPROCESS, Csv(), "comma-separated title substrings marking surveys"),
    Tunable("title_prefixes", PREPROCESS, Csv(), "comma-separated title prefixes marking proceedings"),

    Tunable("window_years", FEATURES, int, "length of a frequency window in years"),
    Tunable("min_df", FEATURES, int, "minimum number of papers containing a feature"),
    Tunable("max_features", FEATURES, int, "keep only the most frequent features (0: all)"),
    Tunable("lambda_scope", FEATURES, str, "averaging range of a feature's mean frequency", LAMBDA_SCOPES),
    Tunable("stopwords", FEATURES, str, "stopword file, one word per line"),

    Tunable("alpha_p", HYPER, float, "weight of citations in the paper update"),
    Tunable("beta_p", HYPER, float, "share of authors in the rest of the paper update"),
    Tunable("alpha_a", HYPER, float, "weight of coauthors in the author update"),
    Tunable("beta_a", HYPER, float, "share of papers in the rest of the author update"),
    Tunable("alpha_f", HYPER, float, "weight of authors in the feature update"),
    Tunable("rho_edge", HYPER, float, "yearly decay of citation and coauthor edges"),
    Tunable("rho_feature", HYPER, float, "yearly decay of feature innovativeness"),
    Tunable("u", HYPER, int, "number of past windows compared by the burst score"),
    Tunable("tolerance", HYPER, float, "L1 convergence threshold"),
    Tunable("max_iterations", HYPER, int, "iteration limit"),
    Tunable("mode", HYPER, as_mode, "ranking variant", MODES),

    Tunable("cutoff_year", PROTOCOL, int, "last year of the ranking period"),
    Tunable("horizon_year", PROTOCOL, int, "last year counted for future citations"),
    Tunable("t_current", PROTOCOL, int, "reference year of the time decay (0: the cutoff year)"),
    Tunable("cohort_years", PROTOCOL, Csv(int), "comma-separated cohort years"),
    Tunable("ks", PROTOCOL, Csv(int), "comma-separated cutoffs k of RI@k"),
    Tunable("oracle_limit", PROTOCOL, int, "largest N+M+K for the dense matrix"),
)

TUNABLES_BY_KEY = {tunable.key: tunable for tunable in TUNABLES}


@dataclass(frozen=True)
class Protocol:
    cutoff_year: int = 2004
    horizon_year: int = 2011
    t_current: int = 0
    cohort_years: Tuple[int, ...] = (2000, 2001, 2002, 2003)
    ks: Tuple[int, ...] = (10, 20, 50)
    oracle_limit: int = 2000

    @property
    def reference_year(self) -> int:
        return self.t_current or self.cutoff_year


class ProtocolSerializer(serializers.Serializer):
    cutoff_year = serializers.IntegerField()
    horizon_year = serializers.IntegerField()
    t_current = serializers.IntegerField(min_value=0)
    cohort_years = serializers.ListField(child=serializers.IntegerField(), allow_empty=False)
    ks = serializers.ListField(child=serializers.IntegerField(min_value=1), allow_empty=False)
    oracle_limit = serializers.IntegerField(min_value=1)

    def validate(self, attrs):
        if attrs["cutoff_year"] >= attrs["horizon_year"]:
            raise serializers.ValidationError("cutoff_year must be earlier than horizon_year")
        if attrs["t_current"] and attrs["t_current"] < attrs["cutoff_year"]:
            raise serializers.ValidationError("t_current must not be earlier than cutoff_year")
        return attrs

    def create(self, validated_data):
        return Protocol(
            cutoff_year=validated_data["cutoff_year"],
            horizon_year=validated_data["horizon_year"],
            t_current=validated_data["t_current"],
            cohort_years=tuple(sorted(set(validated_data["cohort_years"]))),
            ks=tuple(sorted(set(validated_data["ks"]))),
            oracle_limit=validated_data["oracle_limit"],
        )


@dataclass(frozen=True)
class RunConfig:
    workspace: Path
    preprocess: PreprocessConfig
    features: FeatureConfig
    hyper: HyperParams
    protocol: Protocol


def read_config_file(path) -> Dict[str, str]:
    """
    Upper-case keys of the ``[settings]`` section.

    Raises:
        ValueError: if the file cannot be read or holds an unknown key
    """
    try:
        repository = RepositoryIni(str(path))
    except OSError as e:
        raise ValueError(f"cannot read config file {path}: {e}")
    except configparser.Error as e:
        raise ValueError(f"config file {path} is not a valid ini file: {e}")
    parser = repository.parser
    if not parser.has_section(repository.SECTION):
        raise ValueError(f"config file {path} has no [{repository.SECTION}] section")
    values = {}
    for option in parser.options(repository.SECTION):
        key = option.upper()
        if key not in TUNABLES_BY_KEY:
            raise ValueError(f"config file {path}: unknown key {key}")
        values[key] = repository[option]
    return values


def resolve_values(options: Dict[str, Any], config_path=None) -> Dict[str, Any]:
    """
    One value per tunable name, following flag > config file > settings.
    """
    from_file = read_config_file(config_path) if config_path else {}
    values = {}
    for tunable in TUNABLES:
        if options.get(tunable.name) is not None:
            value = options[tunable.name]
            if isinstance(value, str) and tunable.parse is not str:
                value = tunable.parse(value)
        elif tunable.key in from_file:
            try:
                value = tunable.parse(from_file[tunable.key])
            except ValueError as e:
                raise ValueError(f"config key {tunable.key}: {e}")
        else:
            value = settings.SCIRANK[tunable.key]
        if tunable.choices and value not in tunable.choices:
            raise ValueError(f"{tunable.key} must be one of {', '.join(tunable.choices)}, got {value!r}")
        values[tunable.name] = value
    return values


def _group(values, group):
    return {t.name: values[t.name] for t in TUNABLES if t.group == group}


def _validated(serializer):
    if not serializer.is_valid():
        raise ValueError("; ".join(f"{field}: {' '.join(str(m) for m in messages)}"
                                   for field, messages in serializer.errors.items()))
    return serializer.save()


def build_run_config(options: Dict[str, Any], workspace, config_path=None) -> RunConfig:
    """
    Raises:
        ValueError: if a value is missing, malformed or out of range
    """
    values = resolve_values(options, config_path)
    preprocess = _group(values, PREPROCESS)
    return RunConfig(
        workspace=Path(workspace),
        preprocess=PreprocessConfig(
            min_year=int(preprocess["min_year"]),
            require_abstract=as_bool(preprocess["require_abstract"]),
            title_patterns=tuple(p for p in preprocess["title_patterns"] if p),
            title_prefixes=tuple(p for p in preprocess["title_prefixes"] if p),
        ),
        features=_validated(FeatureConfigSerializer(data=_group(values, FEATURES))),
        hyper=_validated(HyperParamsSerializer(data=_group(values, HYPER))),
        protocol=_validated(ProtocolSerializer(data=_group(values, PROTOCOL))),
    )
