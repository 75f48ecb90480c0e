from rest_framework import serializers

from corpus.models import PaperRecord


class PaperRecordSerializer(serializers.Serializer):
    """
    Paper serializer for one line of the native corpus format
    """
    paper_id = serializers.CharField(max_length=255)
    title = serializers.CharField(allow_blank=True, trim_whitespace=True)
    abstract = serializers.CharField(required=False, allow_blank=True, allow_null=True, default="")
    author_ids = serializers.ListField(child=serializers.CharField(), required=False, default=list)
    author_names = serializers.ListField(child=serializers.CharField(allow_blank=True), required=False, default=list)
    year = serializers.IntegerField(min_value=1900)
    venue = serializers.CharField(required=False, allow_blank=True, allow_null=True, default="")
    references = serializers.ListField(child=serializers.CharField(), required=False, default=list)

    def validate_paper_id(self, value):
        value = value.strip()
        if not value:
            raise serializers.ValidationError("paper_id is blank")
        return value

    def create(self, validated_data):
        names = validated_data.get("author_names", [])
        # 同一作者在一篇论文里只保留一次, 名字跟随第一次出现的位置
        authors = {}
        for position, author_id in enumerate(validated_data.get("author_ids", [])):
            author_id = author_id.strip()
            if author_id and author_id not in authors:
                authors[author_id] = names[position] if position < len(names) else ""
        return PaperRecord(
            paper_id=validated_data["paper_id"],
            title=validated_data["title"],
            year=validated_data["year"],
            abstract=validated_data.get("abstract") or "",
            author_ids=tuple(authors),
            author_names=tuple(authors.values()),
            venue=validated_data.get("venue") or "",
            references=tuple(ref.strip() for ref in validated_data.get("references", [])),
        )
