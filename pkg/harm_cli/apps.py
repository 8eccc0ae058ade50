from django.apps import AppConfig


class HarmCliConfig(AppConfig):
    name = 'harm_cli'
