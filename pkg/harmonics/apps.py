from django.apps import AppConfig


class HarmonicsConfig(AppConfig):
    name = 'harmonics'
