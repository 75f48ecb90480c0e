from django.apps import AppConfig


class EvaluateConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "evaluate"
