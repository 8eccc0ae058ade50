from django.apps import AppConfig


class SymfuncConfig(AppConfig):
    name = 'symfunc'
