from rest_framework import serializers

from textfeat.models import LAMBDA_SCOPES, PAIR, WORD, Feature, FeatureConfig, FeatureStats


class FeatureConfigSerializer(serializers.Serializer):
    """
    Feature table settings
    """
    window_years = serializers.IntegerField(min_value=1)
    min_df = serializers.IntegerField(min_value=1)
    max_features = serializers.IntegerField(min_value=0)
    lambda_scope = serializers.ChoiceField(choices=LAMBDA_SCOPES)
    stopwords = serializers.CharField(allow_blank=True, required=False, default="")

    def create(self, validated_data):
        return FeatureConfig(**validated_data)


class SnapshotHeaderSerializer(serializers.Serializer):
    """
    First line of features.jsonl
    """
    origin = serializers.IntegerField()
    window_years = serializers.IntegerField(min_value=1)
    lambda_scope = serializers.ChoiceField(choices=LAMBDA_SCOPES)
    global_lambda = serializers.FloatField(min_value=0)
    rho_feature = serializers.FloatField(min_value=0)
    u = serializers.IntegerField(min_value=1)
    features = serializers.IntegerField(min_value=0)
    windows = serializers.ListField(child=serializers.IntegerField())


class FeatureStatsSerializer(serializers.Serializer):
    """
    One feature of features.jsonl
    """
    key = serializers.CharField()
    kind = serializers.ChoiceField(choices=(WORD, PAIR), source="feature.kind")
    terms = serializers.ListField(child=serializers.CharField(), source="feature.terms")
    window_freqs = serializers.ListField(child=serializers.IntegerField(min_value=0))
    first_seen = serializers.IntegerField(min_value=0)
    lambda_i = serializers.FloatField(min_value=0)
    df = serializers.IntegerField(min_value=0)
    innovativeness = serializers.ListField(child=serializers.FloatField(min_value=0))

    def validate(self, attrs):
        feature = Feature.from_key(attrs["key"])
        if feature.kind != attrs["feature"]["kind"] or list(feature.terms) != attrs["feature"]["terms"]:
            raise serializers.ValidationError(f"kind/terms do not match key {attrs['key']!r}")
        return attrs

    def create(self, validated_data):
        return FeatureStats(
            feature=Feature.from_key(validated_data["key"]),
            window_freqs=tuple(validated_data["window_freqs"]),
            first_seen=validated_data["first_seen"],
            lambda_i=validated_data["lambda_i"],
            df=validated_data["df"],
            innovativeness=tuple(validated_data["innovativeness"]),
        )
