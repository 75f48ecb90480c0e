from django.apps import AppConfig


class MrfrankConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "mrfrank"
