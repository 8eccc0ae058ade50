from django.apps import AppConfig


class ExactArithConfig(AppConfig):
    name = 'exact_arith'
