"""
Django settings for scirank project.

The project has no web surface: everything runs through management commands
(see README.md). Settings keep the Django layout so that apps, logging and
the test runner work the usual way.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""
import os.path
from pathlib import Path
from decouple import config, Csv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config("SECRET_KEY", default="scirank-local-only-not-secret")

DEBUG = config("DEBUG", default=True, cast=bool)

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    "rest_framework",

    "corpus.apps.CorpusConfig",  # 语料解析与预处理
    "textfeat.apps.TextfeatConfig",  # 文本特征与创新度
    "graphs.apps.GraphsConfig",  # 五类稀疏图
    "mrfrank.apps.MrfrankConfig",  # 互增强迭代
    "evaluate.apps.EvaluateConfig",  # RI 评估
]

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

# 只用序列化器做校验, 不需要 django.contrib.auth
REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
}

# Defaults for every tunable of the pipeline. Each one can be overridden from
# the environment, from a run config file (--config) and from a flag.
SCIRANK = {
    "WORKSPACE": config("WORKSPACE", default=str(BASE_DIR / "workspace")),
    # preprocess
    "MIN_YEAR": config("MIN_YEAR", default=1990, cast=int),
    "REQUIRE_ABSTRACT": config("REQUIRE_ABSTRACT", default=False, cast=bool),
    "TITLE_PATTERNS": config("TITLE_PATTERNS", default="survey,a review of", cast=Csv()),
    "TITLE_PREFIXES": config("TITLE_PREFIXES", default="proceedings of,workshop on", cast=Csv()),
    # text features
    "WINDOW_YEARS": config("WINDOW_YEARS", default=1, cast=int),
    "MIN_DF": config("MIN_DF", default=3, cast=int),
    "MAX_FEATURES": config("MAX_FEATURES", default=0, cast=int),
    "LAMBDA_SCOPE": config("LAMBDA_SCOPE", default="lifetime"),
    "STOPWORDS": config("STOPWORDS", default=str(BASE_DIR / "textfeat" / "data" / "stopwords.txt")),
    # mutual reinforcement (gamma1 = 0.4, gamma2 = 0.3)
    "ALPHA_P": config("ALPHA_P", default=0.4, cast=float),
    "BETA_P": config("BETA_P", default=1.0 / 3.0, cast=float),
    "ALPHA_A": config("ALPHA_A", default=0.4, cast=float),
    "BETA_A": config("BETA_A", default=0.5, cast=float),
    "ALPHA_F": config("ALPHA_F", default=0.5, cast=float),
    "RHO_EDGE": config("RHO_EDGE", default=0.2, cast=float),
    "RHO_FEATURE": config("RHO_FEATURE", default=0.2, cast=float),
    "U": config("U", default=3, cast=int),
    "TOLERANCE": config("TOLERANCE", default=1e-8, cast=float),
    "MAX_ITERATIONS": config("MAX_ITERATIONS", default=200, cast=int),
    "MODE": config("MODE", default="full"),
    # evaluation protocol: rank with data up to 2004, count citations 2005-2011
    "CUTOFF_YEAR": config("CUTOFF_YEAR", default=2004, cast=int),
    "HORIZON_YEAR": config("HORIZON_YEAR", default=2011, cast=int),
    "T_CURRENT": config("T_CURRENT", default=0, cast=int),  # 0 means the cutoff year
    "COHORT_YEARS": config("COHORT_YEARS", default="2000,2001,2002,2003", cast=Csv(int)),
    "KS": config("KS", default="10,20,50", cast=Csv(int)),
    # dense oracle
    "ORACLE_LIMIT": config("ORACLE_LIMIT", default=2000, cast=int),
}

# 日志配置
LOG_DIR = os.path.join(BASE_DIR, "logs")
os.makedirs(LOG_DIR, exist_ok=True)

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        # 定义输出格式
        "standard": {
            "format": "[%(asctime)s] [%(levelname)s] [%(name)s:%(lineno)d] [%(module)s:%(funcName)s] %(message)s"
        },
        "simple": {
            "format": "[%(asctime)s] [%(levelname)s] %(message)s"
        },
    },
    "filters": {
        "skip_autoreload": {
            "()": "django.utils.log.CallbackFilter",
            "callback": lambda record: not record.name.startswith("django.utils.autoreload"),
        },
        "skip_db_backends": {
            "()": "django.utils.log.CallbackFilter",
            "callback": lambda record: not record.name.startswith("django.db.backends"),
        },
    },
    "handlers": {
        "console": {
            "level": config("LOG_LEVEL", default="INFO"),
            "class": "logging.StreamHandler",  # 输出到控制台
            "formatter": "simple",
        },
        "file": {
            "level": "DEBUG",
            "filters": ["skip_autoreload", "skip_db_backends"],
            "class": "logging.FileHandler",  # 输出到文件
            "filename": os.path.join(LOG_DIR, "scirank.log"),
            "formatter": "standard",
            "delay": True,
        },
    },
    "loggers": {
        "django": {
            "handlers": ["file"],
            "level": "INFO",
            "propagate": True,
        },
        "scirank": {
            "handlers": ["console", "file"],
            "level": "DEBUG",
            "propagate": False,
        },
    },
}
