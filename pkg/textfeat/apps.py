from django.apps import AppConfig


class TextfeatConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "textfeat"
